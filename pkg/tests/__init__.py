# Test Suite