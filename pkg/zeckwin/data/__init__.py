from .cache import DataCache, load_or_synthesize_theta, theta_key

__all__ = ["DataCache", "load_or_synthesize_theta", "theta_key"]
