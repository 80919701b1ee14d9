# -*- coding: utf-8 -*-
"""
Package principal 'src' du simulateur FEC Polar-BCH.

Ce package contient l'ensemble du code source de l'application,
organisé en sous-packages fonctionnels.

Sous-packages disponibles:
- `codes`:      Corps de Galois, codes BCH, codes polaires, codes produits et décodeurs.
- `channel`:    Modulation 16QAM, canal AWGN, rejeu de bruit, entrelaceur.
- `simulation`: Configuration, balayages BER, adaptation de débit, CSV, auto-test.
- `utils`:      Logging et ressources système.
"""
__version__ = "1.0.0"
