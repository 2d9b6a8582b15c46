"""Policy iteration for the American put."""
