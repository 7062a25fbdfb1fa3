"""
Configuration settings for Unlabelled Necklace Ranking
"""

# Application Settings
APP_NAME = "Unlabelled Necklace Ranking"
APP_VERSION = "0.1.0"
APP_DESCRIPTION = "Polynomial-time ranking and unranking of binary unlabelled necklaces"

# Logging
LOG_LEVEL = "WARNING"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Oracle limits
ORACLE_MAX_LENGTH = 16
ORACLE_MAX_WORDS = 2 ** 20

# CLI defaults
DEFAULT_VERIFY_LENGTH = 8
DEFAULT_BENCH_LENGTHS = (8, 12, 16)
BENCH_SEED = 20240101
