""" Contains one module per CLI subcommand """
