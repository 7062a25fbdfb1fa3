# Unlabelled Necklace Ranking
__version__ = "0.1.0"
