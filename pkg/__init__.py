'''Python IARA library - exact toral pairs, automorphism gradings and extended affinizations'''
