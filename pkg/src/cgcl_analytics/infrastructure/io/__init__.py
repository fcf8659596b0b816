"""Adaptadores de persistencia: TUDataset, caches binarios y reportes CSV."""
