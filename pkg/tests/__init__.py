"""Tests for lambda-disperse."""
