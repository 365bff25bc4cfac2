# Category O
# Projective dimensions, graded Ext families, verification suite and the CLI
