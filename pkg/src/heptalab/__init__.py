"""heptalab: a desk-scale laboratory for hyperbolic tiling constructions.

Subpackages cover the ternary heptagrid and its mantilla, isoclines,
the one-dimensional bracket model, interwoven triangles with full
signal simulation, their transfer onto the heptagrid, Turing-machine
embedding, a bounded Wang-tile engine, and SVG rendering.
"""

__version__ = "0.1.0"
