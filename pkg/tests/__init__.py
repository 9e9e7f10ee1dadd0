"""
Tests package for expograph.
"""
