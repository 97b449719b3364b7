"""pbeam 명령행 도구: 혼합 유한요소 p-biharmonic 보 해석기"""
