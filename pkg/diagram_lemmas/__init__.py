"""Diagram lemmas for finite groups and vector spaces over prime fields."""
