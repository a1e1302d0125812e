from django.apps import AppConfig


class StylizedFactsAppConfig(AppConfig):
    name = 'stylized_facts_app'
    verbose_name = 'Stylized facts statistics'
