# Test Fixtures