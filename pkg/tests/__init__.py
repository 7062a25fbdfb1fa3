"""Test package for Unlabelled Necklace Ranking"""
