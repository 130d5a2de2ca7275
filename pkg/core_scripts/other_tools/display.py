#!/usr/bin/env python
"""
display.py

Tools to display stage banners, verdicts and warnings on the console.
Colors are only used when the stream is a terminal.
"""
from __future__ import absolute_import
from __future__ import print_function

import sys
import datetime


class DisplayColors:
    OKBLUE = '\033[94m'
    OKGREEN = '\033[92m'
    WARNING = '\033[93m'
    FAIL = '\033[91m'
    ENDC = '\033[0m'

# style name -> color prefix
_STYLE = {'warning': DisplayColors.WARNING,
          'highlight': DisplayColors.OKGREEN,
          'ok': DisplayColors.OKBLUE,
          'error': DisplayColors.FAIL}


def f_print(message, opt='ok', end='\n', flush=False, stream=None):
    """ f_print(message, opt)
    Print message with specific style

    Args:
      message: str
      opt: str, "warning", "highlight", "ok", "error"
           any other value prints the message without color
      stream: file object, default sys.stdout
    """
    stream = sys.stdout if stream is None else stream
    if opt in _STYLE and stream.isatty():
        print(_STYLE[opt] + str(message) + DisplayColors.ENDC,
              flush=flush, end=end, file=stream)
    else:
        print(message, flush=flush, end=end, file=stream)
    return

def f_print_w_date(message, level='m'):
    """ f_print_w_date(message, level)

    Stage banner with the wall-clock time. level 'h' frames the banner
    (one per command run), 'm' prints a single line per stage.
    """
    stamp = datetime.datetime.now()
    if level == 'h':
        message = '---  {} {:%Y-%m-%d %H:%M:%S} ---'.format(message, stamp)
        rule = '-' * len(message)
        f_print(rule)
        f_print(message)
        f_print(rule)
    else:
        f_print('--- {} {:%H:%M:%S} ---'.format(message, stamp))
    sys.stdout.flush()
    return

def f_print_verdict(passed, message):
    """ f_print_verdict(passed, message)
    Print PASS / FAIL followed by message
    """
    if passed:
        f_print("PASS " + str(message), 'highlight', flush=True)
    else:
        f_print("FAIL " + str(message), 'error', flush=True)
    return

def f_print_error(message):
    """ f_print_error(message)
    Error line on stderr; the caller decides the exit status
    """
    f_print("Error: " + str(message), 'error', stream=sys.stderr, flush=True)

def f_print_message(message, flush=False, end='\n'):
    f_print(message, 'normal', flush=flush, end=end)

if __name__ == "__main__":
    pass
