# Korean toy resources (TOPIK-style levels). Inflected forms reach their
# dictionary lemmas through the lemma table.

LEXICON = {
    "TOPIK1": """마을 강 크다 다리 사람 많다 시장 쌀 사다 교회 아름답다 창문 후 빨리 왕 위
년 동안 물건 자주 끝나다 넓다 숲 학교 아이 오래되다 말 그림 새롭다 있다 여름 축제 오다
집 벽 고치다 생각하다 작다 기차 여행 나라 중요하다 배 도착하다 도서관 책 읽다 쓰다 배우다
길다 겨울 물 차갑다 일요일 아침 공원 걷다 동쪽 차 가져오다 탑 가장 건물 하나 생활 가족
노래 부르다 공장 처음 만들다 나중 산 북쪽 바람 젊은이 일 찾다 가다 살다 얻다 시작하다
땅 여러 조금씩 힘들다 짓다 만 권 두 이백 바다""",
    "TOPIK2": """유명하다 상인 전쟁 인구 늘다 성 계곡 나르다 약속 정부 다니다 말하다 조사하다
박물관 노동자 부서지다 의회 항구 철도 편하다 경제 멀다 결혼식 전통적 기계 수도 비교하다
막다 옮기다 넓히다 모으다 부유하다 언덕 서다 발전 장사 지키다 천 약 세기 농부 주로""",
    "TOPIK3": """지역 군대 양국 맺다 학자 기원 서로 돕다 포목 비단 공사""",
    "TOPIK4": """주민 건설하다 다수 구입하다 지배하다 현대적 곤란하다 풍부하다""",
    "TOPIK5": """저명하다 급속히 분쟁 획득하다 거주하다 번영 영토 상업 점차""",
    "TOPIK6": """빈번히 웅장하다 개시하다 유지하다""",
}

PHRASES = {}

SYNONYMS = [
    ("주민", "사람"), ("건설했다", "지었다"), ("다수의", "여러"), ("구입했다", "샀다"),
    ("저명한", "유명한"), ("급속히", "빨리"), ("빈번히", "자주"), ("분쟁", "전쟁"),
    ("획득했다", "얻었다"), ("거주했다", "살았다"), ("현대적인", "새로운"), ("번영", "발전"),
    ("상업", "장사"), ("웅장한", "큰"), ("점차", "조금씩"), ("개시했다", "시작했다"),
    ("곤란했지만", "힘들었지만"), ("풍부한", "많은"), ("영토", "땅"), ("유지했다", "지켰다"),
]

LEMMAS = [
    ("큰", "크다", "ADJ"), ("건설했다", "건설하다", "VERB"), ("지었다", "짓다", "VERB"),
    ("구입했다", "구입하다", "VERB"), ("샀다", "사다", "VERB"), ("아름다운", "아름답다", "ADJ"),
    ("저명한", "저명하다", "ADJ"), ("유명한", "유명하다", "ADJ"), ("늘었다", "늘다", "VERB"),
    ("거주했다", "거주하다", "VERB"), ("살았다", "살다", "VERB"), ("지배했다", "지배하다", "VERB"),
    ("날랐다", "나르다", "VERB"), ("맺고", "맺다", "VERB"), ("끝났다", "끝나다", "VERB"),
    ("넓은", "넓다", "ADJ"), ("획득했다", "획득하다", "VERB"), ("얻었다", "얻다", "VERB"),
    ("다녔다", "다니다", "VERB"), ("오래된", "오래되다", "ADJ"), ("조사했다", "조사하다", "VERB"),
    ("현대적인", "현대적", "ADJ"), ("새로운", "새롭다", "ADJ"), ("있다", "있다", "VERB"),
    ("많은", "많다", "ADJ"), ("온다", "오다", "VERB"), ("부서진", "부서지다", "VERB"),
    ("고쳤다", "고치다", "VERB"), ("작다고", "작다", "ADJ"), ("생각했다", "생각하다", "VERB"),
    ("편해졌다", "편하다", "ADJ"), ("중요했다", "중요하다", "ADJ"), ("먼", "멀다", "ADJ"),
    ("도착했다", "도착하다", "VERB"), ("배운다", "배우다", "VERB"), ("길고", "길다", "ADJ"),
    ("차갑다", "차갑다", "ADJ"), ("걷는다", "걷다", "VERB"), ("온", "오다", "VERB"),
    ("가져왔다", "가져오다", "VERB"), ("가장", "가장", "ADV"), ("곤란했지만", "곤란하다", "ADJ"),
    ("힘들었지만", "힘들다", "ADJ"), ("도왔다", "돕다", "VERB"), ("전통적인", "전통적", "ADJ"),
    ("불렀다", "부르다", "VERB"), ("풍부한", "풍부하다", "ADJ"), ("만들었지만", "만들다", "VERB"),
    ("만들었다", "만들다", "VERB"), ("비교하면", "비교하다", "VERB"), ("작았다", "작다", "ADJ"),
    ("막아", "막다", "VERB"), ("준다", "주다", "AUX"), ("찾으러", "찾다", "VERB"),
    ("옮겼다", "옮기다", "VERB"), ("넓혔다", "넓히다", "VERB"), ("모았다", "모으다", "VERB"),
    ("부유해졌다", "부유하다", "ADJ"), ("웅장한", "웅장하다", "ADJ"), ("서", "서다", "VERB"),
    ("개시했다", "개시하다", "VERB"), ("시작했다", "시작하다", "VERB"), ("유지했다", "유지하다", "VERB"),
    ("지켰다", "지키다", "VERB"), ("강한", "강하다", "ADJ"), ("젊은이들이", "젊은이", "NOUN"),
    ("주민들은", "주민", "NOUN"), ("사람들은", "사람", "NOUN"), ("상인들이", "상인", "NOUN"),
    ("상인들은", "상인", "NOUN"), ("학자들은", "학자", "NOUN"), ("노동자들은", "노동자", "NOUN"),
    ("아이들은", "아이", "NOUN"), ("사람들이", "사람", "NOUN"), ("음악가들은", "음악가", "NOUN"),
    ("가족들은", "가족", "NOUN"), ("있었다", "있다", "VERB"), ("지나치게", "지나치게", "ADV"),
    ("위해", "위하다", "VERB"), ("덕분에", "덕분", "NOUN"), ("대해", "대하다", "VERB"),
    ("통해", "통하다", "VERB"), ("의해", "의하다", "VERB"), ("매주", "매주", "ADV"),
    ("매년", "매년", "ADV"), ("약", "약", "NOUN"), ("서있다", "서다", "VERB"),
    ("자랐다", "자라다", "VERB"), ("중", "중", "NOUN"),
]

SENTENCES = [
    "마을 주민들은 강 근처에 큰 다리를 건설했다.",
    "다수의 상인들이 매주 시장에서 쌀과 포목을 구입했다.",
    "이 지역의 교회는 아름다운 창문으로 저명한 곳이다.",
    "전쟁 후에 마을의 인구는 급속히 늘었다.",
    "왕은 계곡 위의 성에 거주했다.",
    "군대는 이백 년 동안 이 지역을 지배했다.",
    "농부들은 빈번히 강을 통해 물건을 날랐다.",
    "양국이 약속을 맺고 분쟁은 끝났다.",
    "그 후에 정부는 넓은 숲의 영토를 획득했다.",
    "학교에는 주로 상인의 아이들이 다녔다.",
    "학자들은 오래된 말의 기원에 대해 조사했다.",
    "박물관에는 현대적인 그림이 많이 있다.",
    "매년 여름 축제에는 많은 사람들이 온다.",
    "폭풍 후에 노동자들은 부서진 벽을 고쳤다.",
    "마을 의회는 오래된 항구가 지나치게 작다고 생각했다.",
    "새로운 철도 덕분에 두 마을 사이의 여행이 편해졌다.",
    "이 땅은 나라의 경제에 매우 중요했다.",
    "먼 항구에서 배가 도착했다.",
    "도서관에는 약 만 권의 책이 있다.",
    "아이들은 마을 학교에서 읽기와 쓰기를 배운다.",
    "강은 길고 겨울에는 물이 매우 차갑다.",
    "사람들은 일요일 아침에 자주 공원을 걷는다.",
    "동쪽에서 온 상인들은 차와 비단을 가져왔다.",
    "오래된 탑은 이 나라에서 가장 오래된 건물 중 하나이다.",
    "마을의 생활은 곤란했지만 가족들은 서로 도왔다.",
    "음악가들은 결혼식에서 전통적인 노래를 불렀다.",
    "이 지역에는 일 년 내내 풍부한 물이 있다.",
    "공장은 처음에 포목을 만들었지만 나중에 기계를 만들었다.",
    "마을은 수도와 비교하면 작았다.",
    "산은 북쪽의 강한 바람을 막아 준다.",
    "많은 젊은이들이 일을 찾으러 수도로 옮겼다.",
    "항구는 큰 배를 위해 넓혔다.",
    "지역의 번영은 먼 마을에서 농부들을 모았다.",
    "마을은 상업을 통해 점차 부유해졌다.",
    "웅장한 성은 언덕 위에 서있다.",
    "상인들은 새로운 시장을 개시했다.",
    "왕은 오래된 다리를 유지했다.",
]

HEADINGS = ["참고 문헌", "참고문헌", "각주", "같이 보기", "외부 링크", "출처"]
REF_LINES = ["김철수, 『북쪽 마을의 역사』, 서울, 1998년.",
             "마을 의회 기록, 항구 자료, 제1권에서 제4권까지."]
SHORT = "마을에는 작은 박물관이 있다."
TITLES = ["항구 마을", "강 계곡", "오래된 시장"]
