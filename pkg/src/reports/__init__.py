"""Exports the report renderers to make them easier to import"""

from reports.design_files import design_header, render_design_file, write_design_file
from reports.row_stream import render_row_stream, row_to_dict
from reports.tables import render_summary, render_table
