# qwitt - exact sigma-derivation kernel for the q-deformed Witt algebra on C[t, t^-1]
