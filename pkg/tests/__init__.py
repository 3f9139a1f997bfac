"""
Test suite for the chess Ferrers toolkit.
"""
