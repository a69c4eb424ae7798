"""Shared pytest configuration."""


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: catalog-scale checks that take seconds to minutes')
