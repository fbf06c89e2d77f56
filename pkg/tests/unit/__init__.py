"""Unit tests for RLM runtime."""
