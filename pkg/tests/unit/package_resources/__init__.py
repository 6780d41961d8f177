# Makes this directory a Python package for test discovery and imports.
