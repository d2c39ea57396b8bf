#!/usr/bin/env python
"""The twl executable: ``twl <subcommand> [arguments]``."""
import argparse
import os
import sys

SUBCOMMANDS = {
    'eval': 'eval',
    'factor': 'factor',
    'rho': 'rho',
    'symbol': 'symbol',
    'audit': 'audit',
    'extension-check': 'extension_check',
    'k2-witness': 'k2_witness',
}


def main(argv=None):
    """Run one twl subcommand and return its exit status."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'twisted_laurent_project.settings')
    parser = argparse.ArgumentParser(prog='twl', description='Exact arithmetic audits over twisted Laurent rings')
    parser.add_argument('subcommand', choices=sorted(SUBCOMMANDS))
    parser.add_argument('arguments', nargs=argparse.REMAINDER)
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code else 0

    try:
        import django
        from django.core.management import call_command
        from django.core.management.base import CommandError
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    django.setup()

    try:
        call_command(SUBCOMMANDS[namespace.subcommand], *namespace.arguments)
    except CommandError as e:
        sys.stderr.write(f"twl {namespace.subcommand}: {e}\n")
        return e.returncode
    return 0


if __name__ == '__main__':
    sys.exit(main())
