# Integration Tests