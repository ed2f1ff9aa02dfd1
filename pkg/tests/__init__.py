"""Tests for Viral Researcher & Scripter module."""
