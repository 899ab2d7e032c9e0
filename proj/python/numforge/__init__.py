"""Deterministic generator, augmentator and scorer for synthetic numerical
and textual QA data. All functionality lives in the compiled extension; this
package re-exports it."""

from ._numforge import *  # noqa: F401,F403

__version__ = "0.1.0"
