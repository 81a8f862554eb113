// placeholder; bundled corpus text lands with the CLI module
