"""Generating function cache package."""

from app.memory.genfun_cache import GenFunCache

__all__ = ["GenFunCache"]
