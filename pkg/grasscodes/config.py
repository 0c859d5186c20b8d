import os
from dotenv import load_dotenv

load_dotenv()


def _env_int(name, default):
    value = os.environ.get(name)
    return int(value) if value else default


class Config:
    # Enumeration guards
    ENUMERATION_BUDGET = _env_int('GRASSCODES_ENUM_BUDGET', 10**6)
    RING_BUDGET = _env_int('GRASSCODES_RING_BUDGET', 10**4)
    VECTOR_BUDGET = 2**16

    # Entries are reduced mod p in int64, so p*p must stay far from overflow
    MAX_MODULUS = 2**15

    # Randomized sweeps
    DEFAULT_SEED = _env_int('GRASSCODES_SEED', 2024)
    RANDOM_SUBCODES = 200
    RANDOM_PAIRS = 10**4

    # Output
    OUTPUT_FORMAT = os.environ.get('GRASSCODES_FORMAT', 'table')

    # Logging
    DEBUG = False
    TESTING = False
    LOG_LEVEL = os.environ.get('GRASSCODES_LOG_LEVEL', 'WARNING')
    LOG_FILE = os.environ.get('GRASSCODES_LOG_FILE', '')


class DevelopmentConfig(Config):
    DEBUG = True
    LOG_LEVEL = os.environ.get('GRASSCODES_LOG_LEVEL', 'INFO')


class ProductionConfig(Config):
    DEBUG = False
    LOG_FILE = os.environ.get('GRASSCODES_LOG_FILE', 'logs/grasscodes.log')


class TestingConfig(Config):
    TESTING = True
    DEFAULT_SEED = 2024
    RANDOM_SUBCODES = 50
    RANDOM_PAIRS = 2000
    OUTPUT_FORMAT = 'table'
    LOG_LEVEL = 'WARNING'
    LOG_FILE = ''


config = {
    'default': DevelopmentConfig,
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
}
