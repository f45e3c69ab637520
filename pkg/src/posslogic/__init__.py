"""Possibilistic-logic reasoning: weighted resolution over clauses carrying
necessity or possibility lower bounds."""
