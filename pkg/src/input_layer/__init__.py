"""
input_layer package
-----------------------
Instance and transcript files, seeded instance generation
"""
