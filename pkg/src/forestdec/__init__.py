"""Two-part bounded arc decompositions of digraphs."""
