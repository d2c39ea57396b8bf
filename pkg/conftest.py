"""
Shared pytest configuration: hypothesis profiles for the algebraic law tests.
"""

import os

import hypothesis

hypothesis.settings.register_profile('default', deadline=None, max_examples=40)
hypothesis.settings.register_profile('ci', deadline=None, max_examples=200)
hypothesis.settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'default'))
