import json
import logging
from pathlib import Path
from typing import Dict, Optional

from zeckwin.config.settings import settings
from zeckwin.transducer.theta import ThetaMap, theta_synthesize

logger = logging.getLogger(__name__)

class DataCache:
    """
    JSON files under the cache directory, one per key
    """
    def __init__(self, cache_dir: Optional[str] = None):
        self.cache_dir = Path(cache_dir or settings.CACHE_DIR)
        self.cache_dir.mkdir(parents=True, exist_ok=True)
    
    def get(self, key: str) -> Optional[Dict]:
        cache_file = self.cache_dir / f"{key}.json"
        if cache_file.exists():
            with open(cache_file, 'r') as f:
                return json.load(f)
        return None
    
    def set(self, key: str, data: Dict):
        cache_file = self.cache_dir / f"{key}.json"
        with open(cache_file, 'w') as f:
            json.dump(data, f, sort_keys=True)
    
    def clear(self):
        for file in self.cache_dir.glob("*.json"):
            file.unlink()

def theta_key(q: int, m: int, n_cap: int) -> str:
    return f"theta_q{q}_M{m}_n{n_cap}"

def load_or_synthesize_theta(q: int, m: int, n_cap: int, cache: Optional[DataCache] = None) -> ThetaMap:
    """
    Synthesized window maps are reused across runs, keyed by (q, M, n_cap)
    """
    if cache is None:
        if not settings.CACHE_ENABLED:
            return theta_synthesize(q, m, n_cap)
        cache = DataCache()

    key = theta_key(q, m, n_cap)
    payload = cache.get(key)
    if payload is not None:
        logger.info("Window map cache hit: %s", key)
        return ThetaMap.from_json(payload)

    logger.info("Window map cache miss: %s", key)
    theta = theta_synthesize(q, m, n_cap)
    cache.set(key, theta.to_json())
    return theta
