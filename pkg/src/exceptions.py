# -*- coding: utf-8 -*-
"""
Exceptions du projet.

Toutes dérivent de FecError (elle-même un ValueError) : un paramètre ou une
donnée d'entrée invalide. Un échec de décodage n'est jamais une exception.
"""


class FecError(ValueError):
    """Erreur de base du simulateur FEC."""


# --- Corps de Galois ---
class NonPrimitivePolynomialError(FecError):
    """Le polynôme est réductible ou alpha n'engendre pas tout le groupe multiplicatif."""


class DegreeMismatchError(FecError):
    """Le degré du polynôme primitif ne correspond pas à m."""


class ZeroInverseError(FecError, ZeroDivisionError):
    """Inversion de l'élément nul."""


# --- Codes composantes ---
class InvalidRadiusError(FecError):
    """Rayon de correction t incompatible avec la longueur du code."""


class LengthMismatchError(FecError):
    """Longueur de vecteur différente de celle attendue par le code."""


class NonPowerOfTwoLengthError(FecError):
    """Longueur polaire qui n'est pas une puissance de deux."""


class InvalidListSizeError(FecError):
    """Taille de liste SCL < 1."""


# --- Code produit ---
class DimensionMismatchError(FecError):
    """Dimensions de matrice incompatibles avec la configuration du code produit."""


class WrongRowCodeKindError(FecError):
    """Décodeur BCH-BCH (iBDD/SABM) appelé sur un code produit à lignes polaires."""


# --- Canal ---
class LengthNotDivisibleBy4Error(FecError):
    """Nombre de bits non multiple de 4 pour la 16QAM."""


class NonPositiveVarianceError(FecError):
    """Variance de bruit nulle ou négative passée au démappeur."""


class EmptyRecordError(FecError):
    """Enregistrement de bruit vide."""


# --- Harnais de simulation ---
class ConfigInvalidError(FecError):
    """Configuration de balayage invalide."""


class NoiseFileUnreadableError(FecError):
    """Fichier NOISREC1 absent, tronqué ou de mauvais format."""
