# -*- coding: utf-8 -*-
"""
Publication optionnelle de l'avancement d'un balayage sur un broker MQTT.

Topics :
    fec_sim/<run>/status : {"status": "started" | "finished", ...}
    fec_sim/<run>/point  : une ligne de résultat par point SNR
"""
import json
import socket
from dataclasses import asdict
import paho.mqtt.client as mqtt
from src.codes.codec_config import CodecConfig
from src.utils.system_utils import log


def on_paho_log(client, userdata, level, buf):
    """Callback pour les logs Paho MQTT."""
    log(f"MQTT: [PAHO LOG - Level {level}] {buf}", level="DEEP_DEBUG")


def on_sweep_publish(client, userdata, mid, reason_code=None, properties=None):
    log(f"MQTT: Message {mid} publié.", level="DEEP_DEBUG")


def _default_client_factory(client_id):
    return mqtt.Client(client_id=client_id, callback_api_version=mqtt.CallbackAPIVersion.VERSION2)


class SweepProgressPublisher:
    """
    Client MQTT d'avancement. Toute erreur réseau ou de sérialisation est
    journalisée et n'interrompt jamais le balayage.
    Args:
        broker (str): hôte du broker.
        port (int): port du broker.
        run_id (str): identifiant du balayage (segment de topic).
        client_factory (callable): client_id -> client paho (injectable pour les tests).
    """

    def __init__(self, broker, port=1883, run_id="sweep", client_factory=None):
        self.broker = broker
        self.port = int(port)
        self.run_id = run_id
        self.client_factory = client_factory or _default_client_factory
        self.client = None

    @property
    def connected(self):
        return self.client is not None

    def topic(self, suffix):
        return f"{CodecConfig.MQTT_TOPIC_PREFIX}/{self.run_id}/{suffix}"

    def connect(self):
        """
        Connexion au broker et démarrage de la boucle réseau en arrière-plan.
        Returns:
            bool: True si connecté.
        """
        try:
            client = self.client_factory(f"fec_sim_{self.run_id}")
            client.on_publish = on_sweep_publish
            client.on_log = on_paho_log
            log(f"MQTT: Connexion à MQTT ({self.broker}:{self.port})...", level="INFO")
            result = client.connect(self.broker, self.port, CodecConfig.MQTT_KEEPALIVE)
            if result != mqtt.MQTT_ERR_SUCCESS:
                log(f"MQTT: ERREUR - Connexion refusée (Code: {result}). Avancement non publié.", level="ERROR")
                return False
            client.loop_start()
            self.client = client
            return True
        except (socket.timeout, TimeoutError, ConnectionRefusedError, socket.gaierror, OSError) as conn_e:
            log(f"MQTT: ERREUR - Erreur de connexion/réseau MQTT: {conn_e}. Avancement non publié.", level="ERROR")
        except Exception as e:
            log(f"MQTT: ERREUR - Erreur inattendue à la connexion: {e}", level="ERROR")
        self.client = None
        return False

    def _publish(self, suffix, payload):
        if self.client is None:
            return False
        topic = self.topic(suffix)
        try:
            payload_json = json.dumps(payload, ensure_ascii=False)
            self.client.publish(topic, payload=payload_json, qos=1)
            log(f"MQTT: Publié sur {topic}: {payload_json}", level="DEBUG")
            return True
        except TypeError as json_e:
            log(f"MQTT: Erreur sérialisation payload ({topic}): {json_e}", level="ERROR")
        except Exception as pub_e:
            log(f"MQTT: Erreur publication ({topic}): {pub_e}", level="ERROR")
        return False

    def publish_status(self, status, **details):
        return self._publish("status", {"status": status, **details})

    def publish_point(self, row):
        """Publie une SweepRow (ou RateRow)."""
        return self._publish("point", asdict(row))

    def close(self):
        if self.client is None:
            return
        try:
            self.client.loop_stop()
            self.client.disconnect()
        except Exception as disc_e:
            log(f"MQTT: ERREUR déconnexion client: {disc_e}", level="ERROR")
        finally:
            self.client = None
