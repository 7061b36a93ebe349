"""
output_layer package
-----------------------
Logging, run history and tabular reports
"""
