"""
Chess colourings of Ferrers diagrams: counts, characterization, witnesses and verification.
"""
