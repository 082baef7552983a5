# 파일: src/__init__.py
"""
hgstokes
CP^{k-1} 양자 코호몰로지의 초기하 모노드로미 군과 Stokes 행렬 정확 계산

구조:
- exact: 유리수 행렬 커널 (곱, 역행렬, 계수, 영공간, 특성다항식)
- levelt: Levelt 동반행렬 h0, hinf, h1
- groups: Kummer 피복 생성원과 Riemann–Fuchs 관계
- invariants: 이차 불변량 솔버와 구조 분류
- stokes: Gram 정규화, 반사, Coxeter 원소, Stokes 행렬
- euler: Euler 형식 chi 와 braid 뮤테이션
- series: 정칙해 급수, 초기하 연산자, Cayley/Mellin 지수
- numeric: 수치 모노드로미 교차검증
- report: 보고서 스키마, 출력기, 검증 스위트
- config: .env / YAML 설정
"""

__version__ = "0.1.0"
