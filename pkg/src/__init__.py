# Simplicial Homeology Toolkit package
