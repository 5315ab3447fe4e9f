from pydantic_settings import BaseSettings

class Settings(BaseSettings):
    # Orbit horizons
    DEFAULT_N_MAX: int = 10_000
    MAX_N_MAX: int = 100_000

    # Theta synthesis
    DEFAULT_N_CAP: int = 100_000
    DEFAULT_D_MAX: int = 8
    SCAN_CHUNK_SIZE: int = 25_000

    # Normalization
    NORMALIZE_DIGIT_BOUND: int = 5

    # Period detection
    PERIOD_MIN_REPEATS: int = 2

    # File Storage
    CACHE_DIR: str = "./data/cache"
    CACHE_ENABLED: bool = True

    # Logging
    LOG_LEVEL: str = "INFO"

    class Config:
        env_file = ".env"

settings = Settings()
