import logging

__all__ = ['get_logger']

# silence the library by default if nothing is configured
# https://docs.python.org/3/howto/logging.html#configuring-logging-for-a-library
logging.getLogger('sspwalk').addHandler(logging.NullHandler())


def get_logger(name):
    """return a logger instance"""
    return logging.getLogger(name)
