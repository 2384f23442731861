"""Parser, JSON serialization and command-line front-end."""

from .main import main, run
from .parser import ArityError, ExprSyntaxError, parse, to_text

__all__ = ["ArityError", "ExprSyntaxError", "main", "parse", "run", "to_text"]
