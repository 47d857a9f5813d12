"""다중 인스턴스 이진 분류 — 로그 odds 집계, 해석적 TPR/FPR/AUC(N), 임계값 보정"""

__version__ = "1.0.0"
