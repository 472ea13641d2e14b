"""
Generating Function Cache

Versioned on-disk store of exact generating functions, one JSON file per
(kind, L). Entries written by another tool version are invalidated.
"""

import hashlib
import logging
import os
import tempfile
from collections.abc import Callable
from pathlib import Path

from pydantic import ValidationError

from app.combinatorics.patterns import BoundaryKind
from app.core.config import settings
from app.exact.genfun import GenFun
from app.schemas.genfun import CachedGenFun, GenFunPayload

logger = logging.getLogger(__name__)


class GenFunCache:
    """
    Generating function memory.

    Stores exact coefficients so that repeated commands at the same size
    skip the closed form or the ground-state solve.
    """

    def __init__(self, root: Path | None = None, version: str | None = None):
        self.root = Path(root or settings.cache_dir)
        self.version = version or settings.app_version
        self.hits = 0
        self.misses = 0
        self.invalidated = 0

    @staticmethod
    def key(kind: BoundaryKind, size: int) -> str:
        return f"{kind.value}-L{size}"

    def path_for(self, kind: BoundaryKind, size: int) -> Path:
        return self.root / f"{self.key(kind, size)}.json"

    @staticmethod
    def checksum(genfun: GenFun) -> str:
        """Content digest used in logs to tell entries apart."""
        data = ",".join(str(a) for a in genfun.coeffs) + f"|{genfun.z}"
        return hashlib.sha256(data.encode()).hexdigest()[:16]

    def get(self, kind: BoundaryKind, size: int) -> GenFun | None:
        """Cached generating function, or None on a miss or a stale entry."""
        path = self.path_for(kind, size)
        if not path.exists():
            self.misses += 1
            logger.debug("cache miss key=%s", self.key(kind, size))
            return None

        try:
            entry = CachedGenFun.model_validate_json(path.read_text(encoding="utf-8"))
        except (OSError, ValidationError) as exc:
            logger.warning("cache entry unreadable key=%s error=%s", self.key(kind, size), exc)
            self._invalidate(path)
            self.misses += 1
            return None

        genfun = entry.payload.to_genfun()
        if entry.tool_version != self.version or genfun.kind != kind or genfun.size != size:
            logger.info(
                "cache invalidate key=%s cached_version=%s version=%s",
                entry.key, entry.tool_version, self.version,
            )
            self._invalidate(path)
            self.misses += 1
            return None
        if not genfun.is_normalized():
            logger.warning("cache entry fails normalization key=%s", entry.key)
            self._invalidate(path)
            self.misses += 1
            return None

        self.hits += 1
        logger.debug("cache hit key=%s checksum=%s", entry.key, self.checksum(genfun))
        return genfun

    def put(self, genfun: GenFun) -> Path:
        """Write an entry atomically; readers never see a partial file."""
        self.root.mkdir(parents=True, exist_ok=True)
        key = self.key(genfun.kind, genfun.size)
        entry = CachedGenFun(
            key=key,
            payload=GenFunPayload.from_genfun(genfun),
            tool_version=self.version,
        )
        path = self.path_for(genfun.kind, genfun.size)
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=f".{key}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(entry.model_dump_json(indent=2))
            os.replace(tmp, path)
        except OSError:
            Path(tmp).unlink(missing_ok=True)
            raise
        logger.debug("cache store key=%s checksum=%s", key, self.checksum(genfun))
        return path

    def get_or_compute(
        self,
        kind: BoundaryKind,
        size: int,
        compute: Callable[[BoundaryKind, int], GenFun],
    ) -> GenFun:
        cached = self.get(kind, size)
        if cached is not None:
            return cached
        genfun = compute(kind, size)
        try:
            self.put(genfun)
        except OSError as exc:
            logger.warning("cache write failed key=%s error=%s", self.key(kind, size), exc)
        return genfun

    def _invalidate(self, path: Path) -> None:
        self.invalidated += 1
        path.unlink(missing_ok=True)

    def clear(self) -> int:
        """Remove every entry; returns how many were deleted."""
        if not self.root.exists():
            return 0
        removed = 0
        for path in self.root.glob("*.json"):
            path.unlink(missing_ok=True)
            removed += 1
        logger.info("cache cleared root=%s removed=%d", self.root, removed)
        return removed

    def get_statistics(self) -> dict:
        """Get cache statistics."""
        entries = list(self.root.glob("*.json")) if self.root.exists() else []
        return {
            "entries": len(entries),
            "hits": self.hits,
            "misses": self.misses,
            "invalidated": self.invalidated,
            "bytes": sum(p.stat().st_size for p in entries),
        }
