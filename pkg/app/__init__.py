# Wallcross Engine Application