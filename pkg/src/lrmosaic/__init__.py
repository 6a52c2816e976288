"""Mosaics, puzzles, LR tableaux and migration."""
