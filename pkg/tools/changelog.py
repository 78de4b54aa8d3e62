#!/usr/bin/env python3
#
# MIT License
#
# (C) Copyright 2026 immersion-wqo contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a
# copy of this software and associated documentation files (the "Software"),
# to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense,
# and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included
# in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL
# THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR
# OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE,
# ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
#
# Reads release versions from a CHANGELOG.md in the "Keep a Changelog" format.
# setup.py takes the package version from the newest release header.

import argparse
from collections import namedtuple
import logging
import re
import sys

RELEASE_HEADER_RE = re.compile(
    r'^## \[(?P<version>\d+\.\d+\.\d+)\]\s-\s(?P<date>\d{4}-\d{2}-\d{2})\s*$'
)

Release = namedtuple('Release', ['version', 'date'])


def create_parser():
    """Create the argument parser of this script.

    Returns:
        argparse.ArgumentParser: The parser.
    """
    parser = argparse.ArgumentParser(
        description='Print the newest release version of a CHANGELOG.md'
    )
    parser.add_argument(
        'changelog_file',
        help='The CHANGELOG.md to read.'
    )
    parser.add_argument(
        '--all',
        action='store_true',
        help='Print every release as "version date", newest first.'
    )
    return parser


def parse_release(line):
    """Return the Release named by a header line, or None for other lines."""
    match = RELEASE_HEADER_RE.match(line)
    if match is None:
        return None
    return Release(match.group('version'), match.group('date'))


def read_releases(lines):
    """Return the releases of a changelog in file order, newest first.

    The "Unreleased" section has no version and is skipped.
    """
    return [release for release in map(parse_release, lines) if release]


def get_latest_version_from_file(file_path):
    """Return the newest release version of a changelog file, or None."""
    with open(file_path, 'r') as f:
        releases = read_releases(f)
    if not releases:
        logging.error("No release header found in changelog '%s'", file_path)
        return None
    return releases[0].version


def main(argv=None):
    args = create_parser().parse_args(argv)
    try:
        with open(args.changelog_file, 'r') as f:
            releases = read_releases(f)
    except OSError as err:
        logging.error("Failed to read changelog '%s': %s", args.changelog_file, err)
        return 1
    if not releases:
        logging.error("No release header found in changelog '%s'", args.changelog_file)
        return 1
    for release in releases if args.all else releases[:1]:
        print(' '.join(release) if args.all else release.version)
    return 0


if __name__ == '__main__':
    sys.exit(main())
