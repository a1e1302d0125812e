from django.apps import AppConfig


class SimulationAppConfig(AppConfig):
    name = 'simulation_app'
    verbose_name = 'Spin market simulation'
