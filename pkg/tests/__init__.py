"""nilgraph tests."""
