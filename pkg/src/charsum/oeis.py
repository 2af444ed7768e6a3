"""Client for the On-Line Encyclopedia of Integer Sequences search endpoint.

The transport is injectable so tests (and offline use) run against recorded
fixtures; live HTTP is opt-in.  Responses are cached on disk keyed by a hash
of the query string, and the cache is always consulted before the transport,
so a repeated query performs zero network operations.  Live requests are
serialized and rate-limited.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
import urllib.error
import urllib.parse
import urllib.request
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

MIN_QUERY_TERMS = 6
MAX_QUERY_TERMS = 12
LIVE_REQUEST_INTERVAL = 2.0  # seconds between live requests
SEARCH_URL = "https://oeis.org/search"

Transport = Callable[[str], str]


class OeisError(Exception):
    pass


class OeisNetworkError(OeisError):
    """The lookup needed the network and could not use it."""


class OeisParseError(OeisError):
    """The response was not in the expected JSON shape."""


class LowInformationQueryWarning(UserWarning):
    """The query carries too little information for matches to mean much."""


class QueryTruncationWarning(UserWarning):
    """The query exceeded the endpoint-friendly length and was truncated."""


@dataclass(frozen=True)
class OeisMatch:
    sequence_id: str  # e.g. "A000984"
    name: str
    matched_offset: int  # index into the entry's data where the query aligns
    match_length: int  # number of consecutive query terms matched there

    def to_json_dict(self) -> dict:
        return {
            "sequence_id": self.sequence_id,
            "name": self.name,
            "matched_offset": self.matched_offset,
            "match_length": self.match_length,
        }


def default_cache_dir() -> Path:
    env = os.environ.get("CHARSUM_OEIS_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "charsum" / "oeis"


def cache_key(query: str) -> str:
    return hashlib.sha256(query.encode("utf-8")).hexdigest()


def live_transport(query: str) -> str:
    """HTTP GET against the JSON search endpoint."""
    url = SEARCH_URL + "?" + urllib.parse.urlencode({"q": query, "fmt": "json"})
    try:
        with urllib.request.urlopen(url, timeout=30) as resp:
            return resp.read().decode("utf-8")
    except (urllib.error.URLError, OSError) as exc:
        raise OeisNetworkError(f"live lookup failed: {exc}") from exc


def offline_transport(query: str) -> str:
    raise OeisNetworkError(
        "live network lookups are disabled and the query is not cached; "
        "enable them explicitly or seed the cache with a recorded fixture"
    )


class OeisClient:
    """Shared lookup service: disk cache first, then the injected transport."""

    def __init__(
        self,
        transport: Optional[Transport] = None,
        cache_dir: Optional[Path] = None,
        min_interval: float = LIVE_REQUEST_INTERVAL,
    ):
        self._transport = transport if transport is not None else offline_transport
        self.cache_dir = Path(cache_dir) if cache_dir is not None else default_cache_dir()
        self._min_interval = min_interval
        self._lock = threading.Lock()
        self._last_request = 0.0

    def cache_path(self, query: str) -> Path:
        return self.cache_dir / (cache_key(query) + ".json")

    def seed_cache(self, query: str, raw_response: str) -> Path:
        """Record a fixture for the query (what the transport would return)."""
        path = self.cache_path(query)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(raw_response, encoding="utf-8")
        return path

    def lookup(self, values: Sequence[int], max_results: int = 10) -> list[OeisMatch]:
        """Search for the integer sequence; parsed matches, best first.

        Requires at least MIN_QUERY_TERMS values (shorter queries are
        under-determined).  Queries longer than MAX_QUERY_TERMS are truncated
        with a warning; an all-zero query is flagged as low-information.
        """
        values = [int(v) for v in values]
        if len(values) < MIN_QUERY_TERMS:
            raise ValueError(
                f"need at least {MIN_QUERY_TERMS} terms, got {len(values)}"
            )
        if len(values) > MAX_QUERY_TERMS:
            warnings.warn(
                f"query truncated to its first {MAX_QUERY_TERMS} terms",
                QueryTruncationWarning,
                stacklevel=2,
            )
            values = values[:MAX_QUERY_TERMS]
        if all(v == 0 for v in values):
            warnings.warn(
                "all-zero query: matches are ambiguous",
                LowInformationQueryWarning,
                stacklevel=2,
            )
        query = ",".join(str(v) for v in values)
        raw = self._fetch(query)
        return _parse_matches(raw, values, max_results)

    def _fetch(self, query: str) -> str:
        path = self.cache_path(query)
        if path.is_file():
            return path.read_text(encoding="utf-8")
        with self._lock:
            # re-check under the lock: another thread may have just cached it
            if path.is_file():
                return path.read_text(encoding="utf-8")
            wait = self._min_interval - (time.monotonic() - self._last_request)
            if wait > 0 and self._last_request > 0:
                time.sleep(wait)
            raw = self._transport(query)
            self._last_request = time.monotonic()
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(raw, encoding="utf-8")
            return raw


def _parse_matches(
    raw: str, values: Sequence[int], max_results: int
) -> list[OeisMatch]:
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise OeisParseError(f"response is not JSON: {raw[:120]!r}") from exc
    if isinstance(payload, dict):
        entries = payload.get("results")
        if entries is None:
            entries = []
    elif isinstance(payload, list):
        entries = payload
    else:
        raise OeisParseError(f"unexpected response shape: {raw[:120]!r}")

    matches = []
    for entry in entries[:max_results]:
        if not isinstance(entry, dict) or "number" not in entry:
            raise OeisParseError(f"unexpected entry shape: {str(entry)[:120]!r}")
        seq_id = "A%06d" % int(entry["number"])
        name = str(entry.get("name", ""))
        data = _parse_data_terms(entry.get("data", ""))
        offset, length = _best_alignment(data, list(values))
        matches.append(OeisMatch(seq_id, name, offset, length))
    return matches


def _parse_data_terms(data: str) -> list[int]:
    terms = []
    for token in str(data).split(","):
        token = token.strip()
        if token:
            try:
                terms.append(int(token))
            except ValueError:
                return terms
    return terms


def _best_alignment(data: list[int], query: list[int]) -> tuple[int, int]:
    """Longest contiguous run of query terms inside data: (offset, length).

    Offset is the data index where the best run starts; (-1, 0) when no term
    aligns at all.
    """
    best_off, best_len = -1, 0
    for d0 in range(len(data)):
        for q0 in range(len(query)):
            length = 0
            while (
                d0 + length < len(data)
                and q0 + length < len(query)
                and data[d0 + length] == query[q0 + length]
            ):
                length += 1
            if length > best_len:
                best_off, best_len = d0, length
    return best_off, best_len
