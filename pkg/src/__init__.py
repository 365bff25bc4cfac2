# Category O homological calculator
# Main source package

