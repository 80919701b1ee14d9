# -*- coding: utf-8 -*-
"""
Configuration centralisée des codes et des décodeurs.
"""


class CodecConfig:
    """
    Constantes par défaut des codes composantes, du décodeur HSHD et des bases BCH-BCH.
    """
    # --- Corps de Galois (bitmask, bit i = coefficient de x^i) ---
    DEFAULT_PRIMITIVE_POLYS = {
        2: 0b111,  # x^2+x+1
        3: 0b1011,  # x^3+x+1
        4: 0b10011,  # x^4+x+1
        5: 0b100101,  # x^5+x^2+1
        6: 0b1000011,  # x^6+x+1
        7: 0b10001001,  # x^7+x^3+1
        8: 0b100011101,  # x^8+x^4+x^3+x^2+1
        9: 0b1000010001,  # x^9+x^4+1
        10: 0b10000001001,  # x^10+x^3+1
        11: 0b100000000101,  # x^11+x^2+1
        12: 0b1000001010011,  # x^12+x^6+x^4+x+1
        13: 0b10000000011011,  # x^13+x^4+x^3+x+1
        14: 0b100010001000011,  # x^14+x^10+x^6+x+1
        15: 0b1000000000000011,  # x^15+x+1
        16: 0b10001000000001011,  # x^16+x^12+x^3+x+1
    }
    MIN_FIELD_DEGREE = 2
    MAX_FIELD_DEGREE = 16
    # --- Code produit (256,239)^2 ---
    FIELD_DEGREE = 8
    COLUMN_T = 2  # (255,239) BCH au sens strict -> t=2, étendu en (256,239)
    ROW_LENGTH = 256  # N1
    DEFAULT_K1 = 239
    BCH_LADDER_T = (1, 2, 3, 4)  # Echelle de débits BCH-BCH : K = 247, 239, 231, 223
    # --- Polaire ---
    DEFAULT_LIST_SIZE = 8
    BHATTACHARYYA_DESIGN_EPSILON = 0.5
    LLR_CLIP = 50.0  # |LLR| bornée en entrée décodeur
    # --- HSHD ---
    DEFAULT_ALPHA = 3.0
    DEFAULT_L_MAX = 10
    # --- SABM ---
    # Bit très fiable (HRB) : |LLR| > seuil x médiane des |LLR| canal de la trame.
    # L'échelle des LLR suit 1/N0 ; une erreur canal au-delà de 2 médianes demande
    # un bruit de plus de 3 demi-distances, négligeable dans la zone de cascade.
    SABM_HRB_THRESHOLD = 2.0
    SABM_LRB_COUNT = 2  # Bits les moins fiables (LRB) candidats par composante
    # --- Modulation ---
    BITS_PER_SYMBOL = 4
    SYMBOL_RATE_GBAUD = 25.0
    DEFAULT_RATE_SCALE = SYMBOL_RATE_GBAUD * BITS_PER_SYMBOL  # Gb/s par unité de rendement
    DEMAP_N0_FLOOR = 1e-4  # N0 utilisé par le démappeur pour un canal sans bruit
    # --- Télémétrie MQTT ---
    MQTT_TOPIC_PREFIX = "fec_sim"
    MQTT_KEEPALIVE = 60
