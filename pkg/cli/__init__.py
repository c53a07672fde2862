"""Command-line subcommands for Richardson Seeds."""
