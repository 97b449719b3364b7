"""pbeam Core - p-biharmonic 혼합 유한요소 해석 핵심 로직"""
