from typing import Any, Dict, Hashable

from cachetools import LRUCache

from config import CACHE_SIZE

# One LRU cache per kind of result, keyed by (strands, letters)
_CACHES: Dict[str, LRUCache] = {
    "normal_form": LRUCache(maxsize=CACHE_SIZE),
    "jones": LRUCache(maxsize=CACHE_SIZE),
    "alexander": LRUCache(maxsize=CACHE_SIZE),
}


def get_cached(kind: str, key: Hashable):
    cache = _CACHES.get(kind)
    if cache is None:
        return None
    return cache.get(key)


def store(kind: str, key: Hashable, value: Any):
    cache = _CACHES.get(kind)
    if cache is not None:
        cache[key] = value


def clear_caches():
    for cache in _CACHES.values():
        cache.clear()
