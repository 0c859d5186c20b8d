import os

from grasscodes import create_cli

cli = create_cli(os.getenv('GRASSCODES_CONFIG') or 'default')

if __name__ == '__main__':
    cli()
