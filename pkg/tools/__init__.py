'''This folder contains the command line tools for building and checking IARAs.'''
