#!/usr/bin/env python
"""Django's command-line utility for the twl project.

``twl.py`` is the user-facing executable; this script reaches the same
management commands under their Django names (``extension_check``,
``k2_witness``) along with Django's own (``test``, ``shell``).
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'twisted_laurent_project.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
