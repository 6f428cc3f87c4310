# Induced matching package
