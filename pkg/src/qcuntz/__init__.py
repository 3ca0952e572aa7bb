"""Verification toolkit for directed quantum graphs and quantum Cuntz-Krieger algebras."""
