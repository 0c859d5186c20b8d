import logging
import os

import click

from grasscodes.config import config


def _handler(logger, kind):
    return next((h for h in logger.handlers if getattr(h, '_grasscodes', None) == kind), None)


def _setup_logging(app_config):
    logger = logging.getLogger('grasscodes')
    stream_handler = _handler(logger, 'stream')
    if stream_handler is None:
        stream_handler = logging.StreamHandler()
        stream_handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
        stream_handler._grasscodes = 'stream'
        logger.addHandler(stream_handler)
    stream_handler.setLevel(app_config.LOG_LEVEL)
    logger.setLevel(app_config.LOG_LEVEL)

    # File logging outside debug mode
    if not app_config.DEBUG and app_config.LOG_FILE:
        file_handler = _handler(logger, 'file')
        if file_handler is None or file_handler.baseFilename != os.path.abspath(app_config.LOG_FILE):
            if file_handler is not None:
                logger.removeHandler(file_handler)
                file_handler.close()
            directory = os.path.dirname(app_config.LOG_FILE)
            if directory and not os.path.exists(directory):
                os.makedirs(directory)
            file_handler = logging.FileHandler(app_config.LOG_FILE)
            file_handler.setLevel(logging.INFO)
            file_handler.setFormatter(logging.Formatter('%(asctime)s %(levelname)s %(name)s: %(message)s'))
            file_handler._grasscodes = 'file'
            logger.addHandler(file_handler)
        # The file keeps INFO summaries while the console stays at LOG_LEVEL
        logger.setLevel(min(logger.level, logging.INFO))
        logger.info('grasscodes startup')
    else:
        file_handler = _handler(logger, 'file')
        if file_handler is not None:
            logger.removeHandler(file_handler)
            file_handler.close()


def create_cli(config_name='default'):
    app_config = config[config_name]
    _setup_logging(app_config)

    from grasscodes.commands import COMMAND_MODULES, CliState

    @click.group()
    @click.option('--config', 'config_name', type=click.Choice(sorted(config)), default=None,
                  help='Configuration to run with')
    @click.option('--format', 'output_format', type=click.Choice(['table', 'json']), default=None,
                  help='Output format')
    @click.pass_context
    def cli(ctx, config_name, output_format):
        """Rank-metric and Grassmannian codes from ideals of M_2(F_p)"""
        selected = config[config_name] if config_name else app_config
        if selected is not app_config:
            _setup_logging(selected)
        ctx.obj = CliState(config=selected, output_format=output_format or selected.OUTPUT_FORMAT)

    # Command registration
    for module in COMMAND_MODULES:
        for command in module.commands:
            cli.add_command(command)

    return cli
