"""Leaper cycles, second leapers, direction graphs and dual boards."""
