"""Subcommands of the symdet command line."""
