"""
Series Cache
On-disk store of Fourier series keyed by (name, box), written atomically.
"""

import json
import logging
import os
import re
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from .errors import CacheFormatError
from .nu_bridge import MeroForm
from .series import FourierSeries

logger = logging.getLogger(__name__)

_ENTRY = re.compile(r"(?P<name>.+)\.N(?P<box>\d+)\.series")
_UNSAFE = re.compile(r"[^A-Za-z0-9_.+-]")


def safe_name(name: str) -> str:
    """File-system friendly version of an object name."""
    return _UNSAFE.sub("_", name)


def atomic_write(path: Path, text: str) -> None:
    """Write to a temporary file in the target directory, then rename over the target."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=path.suffix)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


@dataclass
class CacheStats:
    hits: int = 0
    restricted_hits: int = 0
    misses: int = 0

    def to_dict(self) -> Dict[str, int]:
        return {'hits': self.hits, 'restricted_hits': self.restricted_hits, 'misses': self.misses}


class SeriesCache:
    """
    Directory of series files named <name>.N<box>.series.

    A request for (name, N) is served by the exact entry, or by restricting
    the smallest stored entry with a larger box.
    """

    def __init__(self, root: Path):
        self.root = Path(root)
        self.stats = CacheStats()

    def path_for(self, name: str, box: int) -> Path:
        return self.root / f"{safe_name(name)}.N{box}.series"

    def entries(self) -> List[Tuple[str, int]]:
        """Stored (file name stem, box) pairs."""
        if not self.root.is_dir():
            return []
        found = []
        for path in sorted(self.root.iterdir()):
            match = _ENTRY.fullmatch(path.name)
            if match:
                found.append((match.group("name"), int(match.group("box"))))
        return found

    def _boxes_for(self, name: str) -> List[int]:
        stem = safe_name(name)
        return sorted(box for entry, box in self.entries() if entry == stem)

    def load(self, path: Path) -> FourierSeries:
        """
        Read one cache file.

        Raises:
            FileNotFoundError: If the file does not exist
            CacheFormatError: If it cannot be decoded
        """
        if not path.exists():
            raise FileNotFoundError(f"File not found: {path}")
        _, series = FourierSeries.from_cache_text(path.read_text(encoding="utf-8"))
        return series

    def get(self, name: str, box: int) -> Optional[FourierSeries]:
        candidates = [b for b in self._boxes_for(name) if b >= box]
        if not candidates:
            self.stats.misses += 1
            return None
        stored = candidates[0]
        try:
            series = self.load(self.path_for(name, stored))
        except CacheFormatError as exc:
            logger.warning("Ignoring unreadable cache entry %s: %s", self.path_for(name, stored), exc)
            self.stats.misses += 1
            return None
        if stored == box:
            self.stats.hits += 1
            return series
        self.stats.restricted_hits += 1
        logger.debug("Serving %s at box %d from box %d", name, box, stored)
        return series.restrict(box)

    def put(self, name: str, series: FourierSeries) -> Path:
        path = self.path_for(name, series.box)
        atomic_write(path, series.to_cache_text(name))
        logger.info("Cached %s (%d terms) at %s", name, len(series), path)
        return path

    def get_or_compute(self, name: str, box: int,
                       compute: Callable[[int], FourierSeries]) -> FourierSeries:
        cached = self.get(name, box)
        if cached is not None:
            return cached
        series = compute(box)
        self.put(name, series)
        return series

    def put_form(self, name: str, form: MeroForm) -> List[Path]:
        """Store every component of a form plus a JSON sidecar with its metadata."""
        paths = [self.put(f"{name}.c{j}", component) for j, component in enumerate(form.components)]
        sidecar = self.root / f"{safe_name(name)}.N{form.box}.json"
        atomic_write(sidecar, json.dumps(form.sidecar(), indent=2) + "\n")
        paths.append(sidecar)
        return paths
