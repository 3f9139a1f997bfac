"""Text templates for human-readable command output."""
