"""Integration tests for RLM runtime."""
