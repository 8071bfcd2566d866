"""Unit tests for quarticaudit."""
