from .parser import ScriptError, parse, tokenize
from .runner import Runner, dump
from .syntax import SessionScript

__all__ = ["ScriptError", "parse", "tokenize", "Runner", "dump", "SessionScript"]
