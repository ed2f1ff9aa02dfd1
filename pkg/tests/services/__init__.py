"""Service tests for Viral Researcher module."""
