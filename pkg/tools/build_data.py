#!/usr/bin/env python3
"""Regenerate every bundled data file under src/babelbot/data/.

Covers: language trigram profiles, confirmation lexicons, response
catalogs, the label synonym table, bundled maps, the 10-language fixture
corpus (replies are canonical action lines; gold actions come from
parsing those replies), and a small translation-QC sample dataset.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from babelbot.engine.parse import canonical_actions, format_plan, parse_action_lines
from babelbot.langid import LanguageProfile

DATA = REPO / "src" / "babelbot" / "data"

LANGS = ["en", "de", "es", "fr", "it", "ru", "zh", "ar", "hi", "pcm"]

# --------------------------------------------------------------------------
# language seeds for the trigram profiles
# --------------------------------------------------------------------------

SEEDS = {
    "en": (
        "The robot moves through the building and answers questions about what it can "
        "see. Please move forward two meters and then turn to the right. Where are you "
        "now and what is around you? Navigate to the kitchen and wait there for a "
        "moment. I would like you to describe the room, take a picture, and come back "
        "to the starting point. The weather is nice today and the children are playing "
        "outside. We will meet again tomorrow morning at the train station. This is a "
        "simple sentence written in plain English for testing. Could you tell me how "
        "fast you are driving right now? Thank you very much for your help and have a "
        "good day. Move in a circle and report what you detect with the camera."
    ),
    "de": (
        "Der Roboter fährt durch das Gebäude und beantwortet Fragen über seine "
        "Umgebung. Bitte gehe zwei Meter geradeaus und drehe dich dann nach rechts. Wo "
        "bist du jetzt und was siehst du um dich herum? Fahre in die Küche und warte "
        "dort einen Augenblick. Ich möchte, dass du den Raum beschreibst, ein Foto "
        "machst und zum Startpunkt zurückkehrst. Das Wetter ist heute schön und die "
        "Kinder spielen draußen. Wir treffen uns morgen früh am Bahnhof wieder. Dies "
        "ist ein einfacher Satz auf Deutsch zum Testen. Kannst du mir sagen, wie "
        "schnell du gerade fährst? Vielen Dank für deine Hilfe und einen schönen Tag "
        "noch. Gehe geradeaus weiter und bleibe dann stehen."
    ),
    "es": (
        "El robot se mueve por el edificio y responde preguntas sobre su entorno. Por "
        "favor avanza dos metros y luego gira a la derecha. ¿Dónde estás ahora y qué "
        "ves a tu alrededor? Ve a la cocina y espera allí un momento. Quiero que "
        "describas la habitación, tomes una foto y vuelvas al punto de partida. El "
        "tiempo está agradable hoy y los niños juegan afuera. Nos veremos mañana por "
        "la mañana en la estación de tren. Esta es una frase sencilla escrita en "
        "español para pruebas. ¿Puedes decirme a qué velocidad vas ahora mismo? Muchas "
        "gracias por tu ayuda y que tengas un buen día. ¿Cuáles son tus funciones y "
        "cuáles tareas puedes hacer por mí? Dime cuál es tu plan."
    ),
    "fr": (
        "Le robot se déplace dans le bâtiment et répond aux questions sur son "
        "environnement. S'il te plaît, avance de deux mètres puis tourne à droite. Où "
        "es-tu maintenant et que vois-tu autour de toi ? Va à la cuisine et attends-y "
        "un instant. Je veux que tu décrives la pièce, que tu prennes une photo et que "
        "tu reviennes au point de départ. Il fait beau aujourd'hui et les enfants "
        "jouent dehors. Nous nous reverrons demain matin à la gare. Ceci est une "
        "phrase simple écrite en français pour les tests. Peux-tu me dire à quelle "
        "vitesse tu roules en ce moment ? Merci beaucoup pour ton aide et bonne journée."
    ),
    "it": (
        "Il robot si muove nell'edificio e risponde alle domande sul suo ambiente. Per "
        "favore avanza di due metri e poi gira a destra. Dove sei adesso e che cosa "
        "vedi intorno a te? Vai in cucina e aspetta lì un momento. Voglio che tu "
        "descriva la stanza, scatti una foto e torni al punto di partenza. Oggi il "
        "tempo è bello e i bambini giocano fuori. Ci rivedremo domani mattina alla "
        "stazione. Questa è una frase semplice scritta in italiano per le prove. Puoi "
        "dirmi a che velocità stai andando in questo momento? Grazie mille per il tuo "
        "aiuto e buona giornata."
    ),
    "ru": (
        "Робот перемещается по зданию и отвечает на вопросы о своём окружении. "
        "Пожалуйста, проедь два метра вперёд, а затем повернись направо. Где ты сейчас "
        "находишься и что видишь вокруг себя? Поезжай на кухню и подожди там немного. "
        "Я хочу, чтобы ты описал комнату, сделал фотографию и вернулся в начальную "
        "точку. Сегодня хорошая погода, и дети играют на улице. Мы снова встретимся "
        "завтра утром на вокзале. Это простое предложение, написанное по-русски для "
        "проверки. Можешь сказать, с какой скоростью ты сейчас едешь? Большое спасибо "
        "за помощь и хорошего дня."
    ),
    "zh": (
        "机器人在大楼里移动，并回答关于周围环境的问题。请前进两米，然后向右转。"
        "你现在在哪里，周围能看到什么？去厨房，在那里等一会儿。"
        "我希望你描述这个房间，拍一张照片，然后回到起点。"
        "今天天气很好，孩子们在外面玩耍。我们明天早上在火车站再见面。"
        "这是一个用中文写的简单句子，用来测试。你能告诉我你现在开多快吗？"
        "非常感谢你的帮助，祝你有美好的一天。"
    ),
    "ar": (
        "يتحرك الروبوت داخل المبنى ويجيب عن الأسئلة حول محيطه. من فضلك تقدم مترين ثم "
        "استدر إلى اليمين. أين أنت الآن وماذا ترى من حولك؟ اذهب إلى المطبخ وانتظر هناك "
        "لحظة. أريد أن تصف الغرفة وتلتقط صورة وتعود إلى نقطة البداية. الطقس جميل اليوم "
        "والأطفال يلعبون في الخارج. سنلتقي مرة أخرى صباح غد في محطة القطار. هذه جملة "
        "بسيطة مكتوبة بالعربية للاختبار. هل يمكنك أن تخبرني بأي سرعة تسير الآن؟ شكرا "
        "جزيلا على مساعدتك وأتمنى لك يوما سعيدا."
    ),
    "hi": (
        "रोबोट इमारत में घूमता है और अपने आसपास के बारे में सवालों के जवाब देता है। कृपया दो मीटर आगे "
        "बढ़ो और फिर दाएँ मुड़ो। तुम अभी कहाँ हो और तुम्हारे चारों ओर क्या दिख रहा है? रसोई में जाओ और "
        "वहाँ थोड़ी देर रुको। मैं चाहता हूँ कि तुम कमरे का वर्णन करो, एक तस्वीर लो और शुरुआती बिंदु पर लौट "
        "आओ। आज मौसम अच्छा है और बच्चे बाहर खेल रहे हैं। हम कल सुबह रेलवे स्टेशन पर फिर मिलेंगे। यह "
        "परीक्षण के लिए हिंदी में लिखा गया एक सरल वाक्य है। क्या तुम मुझे बता सकते हो कि तुम अभी कितनी "
        "तेज़ चल रहे हो? तुम्हारी मदद के लिए बहुत धन्यवाद।"
    ),
    "pcm": (
        "The robot dey waka for inside the building and e dey answer question about "
        "wetin dey around am. Abeg waka go front two meters, den turn right. Where you "
        "dey now and wetin you fit see for your side? Go kitchen make you wait small "
        "for there. I want make you talk how the room be, snap one picture, den come "
        "back go where you start. Today weather fine well well and the pikin dem dey "
        "play outside. We go see again tomorrow morning for train station. Na simple "
        "sentence wey dem write for Naija Pidgin be this one for test. You fit tell me "
        "how fast you dey waka now? Thank you well well for the help wey you give me. "
        "Make you waka go front small small, den tell me wetin you see for road."
    ),
}

# --------------------------------------------------------------------------
# confirmation lexicons
# --------------------------------------------------------------------------

LEXICONS = {
    "en": {
        "positive": ["yes, proceed with execution", "yes", "proceed", "that's correct",
                     "go ahead", "execute", "approved", "confirmed", "affirmative", "ok"],
        "negative": ["no, discard the plan", "do not", "don't", "no", "cancel", "stop",
                     "reject", "discard", "inaccurate", "wrong", "incorrect"],
    },
    "de": {
        "positive": ["ja, führe den plan aus", "ja", "genau", "richtig", "mach weiter",
                     "ausführen", "bestätigt", "korrekt"],
        "negative": ["nein, verwirf den plan", "nein", "nicht", "falsch", "abbrechen",
                     "verwerfen", "stopp", "ungenau"],
    },
    "es": {
        "positive": ["sí, procede con la ejecución", "sí", "si", "correcto", "procede",
                     "ejecuta", "adelante", "confirmado"],
        "negative": ["no, descarta el plan", "no", "cancela", "detente", "incorrecto",
                     "descarta", "rechaza", "inexacto"],
    },
    "fr": {
        "positive": ["oui, procède à l'exécution", "oui", "procède", "c'est correct",
                     "vas-y", "exécute", "confirmé", "d'accord"],
        "negative": ["non, abandonne le plan", "non", "ne pas", "n'exécute pas",
                     "annule", "arrête", "rejette", "incorrect", "faux"],
    },
    "it": {
        "positive": ["sì, procedi con l'esecuzione", "sì", "si", "procedi", "corretto",
                     "esegui", "vai", "confermato", "d'accordo"],
        "negative": ["no, scarta il piano", "no", "non", "annulla", "fermati",
                     "rifiuta", "sbagliato", "scarta"],
    },
    "ru": {
        "positive": ["да, выполняй план", "да", "верно", "правильно", "выполняй",
                     "запускай", "подтверждаю", "хорошо"],
        "negative": ["нет, отмени план", "нет", "не выполняй", "не надо", "отмени",
                     "стоп", "неверно", "неправильно", "отклоняю"],
    },
    "zh": {
        "positive": ["是的，执行计划", "是的", "正确", "执行", "继续", "好的", "确认", "没问题"],
        "negative": ["不要执行", "不要", "不对", "取消", "错误", "停止", "拒绝", "不正确"],
    },
    "ar": {
        "positive": ["نعم، نفذ الخطة", "نعم", "صحيح", "نفذ", "تابع", "موافق", "حسنا"],
        "negative": ["لا، ألغ الخطة", "لا", "لا تنفذ", "ألغ", "خطأ", "توقف",
                     "غير صحيح", "ارفض"],
    },
    "hi": {
        "positive": ["हाँ, योजना चलाओ", "हाँ", "सही", "आगे बढ़ो", "चलाओ", "ठीक है", "मंज़ूर"],
        "negative": ["नहीं, योजना रद्द करो", "नहीं", "मत", "रद्द", "गलत", "रुको", "अस्वीकार"],
    },
    "pcm": {
        "positive": ["yes, run the plan", "yes", "na so", "oya do am", "carry go",
                     "e correct", "make you do am", "abeg continue"],
        "negative": ["no, cancel the plan", "no", "no do am", "abeg stop", "cancel am",
                     "cancel", "e no correct", "leave am", "wrong"],
    },
}

# --------------------------------------------------------------------------
# response catalogs
# --------------------------------------------------------------------------

RESPONSES = {
    "en": {
        "pose_report": "I am at x = {x:g}, y = {y:g}, facing {yaw:g}° ({compass}).",
        "surroundings_none": "No objects are visible in the camera's field of view.",
        "surroundings_list": "I can see: {items}.",
        "snapshot_taken": "Snapshot saved as {ref}.",
        "confirm_request": "I prepared {k} actions. Shall I execute the plan?",
        "plan_rejected": "Understood, the plan has been discarded.",
        "plan_executing": "Confirmed, executing the plan now.",
        "reprompt": "Please confirm or reject the pending plan.",
        "busy": "I am still executing the previous command.",
        "query_ack": "Done.",
        "unparsed_warning": "I could not parse these lines:",
    },
    "de": {
        "pose_report": "Ich bin bei x = {x:g}, y = {y:g}, Blickrichtung {yaw:g}° ({compass}).",
        "surroundings_none": "Im Sichtfeld der Kamera sind keine Objekte zu sehen.",
        "surroundings_list": "Ich sehe: {items}.",
        "snapshot_taken": "Schnappschuss gespeichert als {ref}.",
        "confirm_request": "Ich habe {k} Aktionen vorbereitet. Soll ich den Plan ausführen?",
        "plan_rejected": "Verstanden, der Plan wurde verworfen.",
        "plan_executing": "Bestätigt, ich führe den Plan jetzt aus.",
        "reprompt": "Bitte bestätige oder verwirf den ausstehenden Plan.",
        "busy": "Ich führe noch den vorherigen Befehl aus.",
        "query_ack": "Erledigt.",
        "unparsed_warning": "Diese Zeilen konnte ich nicht verarbeiten:",
    },
    "es": {
        "pose_report": "Estoy en x = {x:g}, y = {y:g}, mirando hacia {yaw:g}° ({compass}).",
        "surroundings_none": "No hay objetos visibles en el campo de visión de la cámara.",
        "surroundings_list": "Puedo ver: {items}.",
        "snapshot_taken": "Captura guardada como {ref}.",
        "confirm_request": "He preparado {k} acciones. ¿Ejecuto el plan?",
        "plan_rejected": "Entendido, el plan ha sido descartado.",
        "plan_executing": "Confirmado, ejecutando el plan ahora.",
        "reprompt": "Por favor confirma o rechaza el plan pendiente.",
        "busy": "Todavía estoy ejecutando el comando anterior.",
        "query_ack": "Hecho.",
        "unparsed_warning": "No pude interpretar estas líneas:",
    },
    "fr": {
        "pose_report": "Je suis à x = {x:g}, y = {y:g}, orienté vers {yaw:g}° ({compass}).",
        "surroundings_none": "Aucun objet n'est visible dans le champ de la caméra.",
        "surroundings_list": "Je vois : {items}.",
        "snapshot_taken": "Instantané enregistré sous {ref}.",
        "confirm_request": "J'ai préparé {k} actions. Dois-je exécuter le plan ?",
        "plan_rejected": "Compris, le plan a été abandonné.",
        "plan_executing": "Confirmé, j'exécute le plan maintenant.",
        "reprompt": "Merci de confirmer ou de rejeter le plan en attente.",
        "busy": "J'exécute encore la commande précédente.",
        "query_ack": "Terminé.",
        "unparsed_warning": "Je n'ai pas pu interpréter ces lignes :",
    },
    "it": {
        "pose_report": "Sono a x = {x:g}, y = {y:g}, rivolto verso {yaw:g}° ({compass}).",
        "surroundings_none": "Nessun oggetto è visibile nel campo visivo della telecamera.",
        "surroundings_list": "Vedo: {items}.",
        "snapshot_taken": "Istantanea salvata come {ref}.",
        "confirm_request": "Ho preparato {k} azioni. Eseguo il piano?",
        "plan_rejected": "Capito, il piano è stato scartato.",
        "plan_executing": "Confermato, eseguo il piano adesso.",
        "reprompt": "Conferma o rifiuta il piano in sospeso.",
        "busy": "Sto ancora eseguendo il comando precedente.",
        "query_ack": "Fatto.",
        "unparsed_warning": "Non sono riuscito a interpretare queste righe:",
    },
    "ru": {
        "pose_report": "Я нахожусь в точке x = {x:g}, y = {y:g}, направление {yaw:g}° ({compass}).",
        "surroundings_none": "В поле зрения камеры нет объектов.",
        "surroundings_list": "Я вижу: {items}.",
        "snapshot_taken": "Снимок сохранён как {ref}.",
        "confirm_request": "Я подготовил {k} действий. Выполнить план?",
        "plan_rejected": "Понял, план отменён.",
        "plan_executing": "Подтверждено, выполняю план.",
        "reprompt": "Пожалуйста, подтверди или отклони ожидающий план.",
        "busy": "Я всё ещё выполняю предыдущую команду.",
        "query_ack": "Готово.",
        "unparsed_warning": "Не удалось разобрать эти строки:",
    },
    "zh": {
        "pose_report": "我在 x = {x:g}，y = {y:g}，朝向 {yaw:g}°（{compass}）。",
        "surroundings_none": "相机视野中没有可见物体。",
        "surroundings_list": "我能看到：{items}。",
        "snapshot_taken": "快照已保存为 {ref}。",
        "confirm_request": "我准备了 {k} 个动作。要执行这个计划吗？",
        "plan_rejected": "明白，计划已取消。",
        "plan_executing": "已确认，现在执行计划。",
        "reprompt": "请确认或拒绝待定的计划。",
        "busy": "我仍在执行上一条命令。",
        "query_ack": "完成。",
        "unparsed_warning": "我无法解析这些行：",
    },
    "ar": {
        "pose_report": "أنا عند x = {x:g}، y = {y:g}، متجه نحو {yaw:g}° ({compass}).",
        "surroundings_none": "لا توجد أجسام مرئية في مجال رؤية الكاميرا.",
        "surroundings_list": "أرى: {items}.",
        "snapshot_taken": "تم حفظ اللقطة باسم {ref}.",
        "confirm_request": "أعددت {k} إجراءات. هل أنفذ الخطة؟",
        "plan_rejected": "مفهوم، تم التخلي عن الخطة.",
        "plan_executing": "تم التأكيد، أنفذ الخطة الآن.",
        "reprompt": "يرجى تأكيد الخطة المعلقة أو رفضها.",
        "busy": "ما زلت أنفذ الأمر السابق.",
        "query_ack": "تم.",
        "unparsed_warning": "تعذر تحليل هذه الأسطر:",
    },
    "hi": {
        "pose_report": "मैं x = {x:g}, y = {y:g} पर हूँ, दिशा {yaw:g}° ({compass})।",
        "surroundings_none": "कैमरे के दृश्य क्षेत्र में कोई वस्तु दिखाई नहीं दे रही है।",
        "surroundings_list": "मुझे दिख रहा है: {items}।",
        "snapshot_taken": "स्नैपशॉट {ref} के रूप में सहेजा गया।",
        "confirm_request": "मैंने {k} क्रियाएँ तैयार की हैं। क्या मैं योजना चलाऊँ?",
        "plan_rejected": "समझ गया, योजना रद्द कर दी गई है।",
        "plan_executing": "पुष्टि हो गई, अब योजना चला रहा हूँ।",
        "reprompt": "कृपया लंबित योजना की पुष्टि करें या उसे अस्वीकार करें।",
        "busy": "मैं अभी भी पिछला आदेश चला रहा हूँ।",
        "query_ack": "हो गया।",
        "unparsed_warning": "मैं इन पंक्तियों को समझ नहीं सका:",
    },
    "pcm": {
        "pose_report": "I dey for x = {x:g}, y = {y:g}, I face {yaw:g}° ({compass}).",
        "surroundings_none": "No object dey show for camera eye.",
        "surroundings_list": "I fit see: {items}.",
        "snapshot_taken": "I don save snapshot as {ref}.",
        "confirm_request": "I don arrange {k} actions. Make I run the plan?",
        "plan_rejected": "I don hear, I don cancel the plan.",
        "plan_executing": "Correct, I dey run the plan now.",
        "reprompt": "Abeg confirm or cancel the plan wey dey wait.",
        "busy": "I still dey run the first command.",
        "query_ack": "E don finish.",
        "unparsed_warning": "I no fit understand these lines:",
    },
}

# --------------------------------------------------------------------------
# label synonym table (label token -> in-language alternatives)
# --------------------------------------------------------------------------

SYNONYMS = {
    "de": {"chair": ["stuhl"], "table": ["tisch"], "fire": ["feuerlöscher"],
           "extinguisher": ["feuerlöscher"], "box": ["kiste", "karton"],
           "plant": ["pflanze"], "person": ["person", "mensch"]},
    "es": {"chair": ["silla"], "table": ["mesa"], "fire": ["extintor"],
           "extinguisher": ["extintor"], "box": ["caja"], "plant": ["planta"],
           "person": ["persona"]},
    "fr": {"chair": ["chaise"], "table": ["table"], "fire": ["extincteur"],
           "extinguisher": ["extincteur"], "box": ["boîte", "carton"],
           "plant": ["plante"], "person": ["personne"]},
    "it": {"chair": ["sedia"], "table": ["tavolo"], "fire": ["estintore"],
           "extinguisher": ["estintore"], "box": ["scatola"], "plant": ["pianta"],
           "person": ["persona"]},
    "ru": {"chair": ["стул", "стулу"], "table": ["стол", "столу"],
           "fire": ["огнетушитель", "огнетушителю"],
           "extinguisher": ["огнетушитель", "огнетушителю"],
           "box": ["коробка", "коробке"], "plant": ["растение"],
           "person": ["человек"]},
    "zh": {"chair": ["椅子"], "table": ["桌子"], "fire": ["灭火器"],
           "extinguisher": ["灭火器"], "box": ["箱子"], "plant": ["植物"],
           "person": ["人"]},
    "ar": {"chair": ["كرسي", "الكرسي"], "table": ["طاولة", "الطاولة"],
           "fire": ["طفاية"], "extinguisher": ["طفاية"],
           "box": ["صندوق", "الصندوق"], "plant": ["نبتة"], "person": ["شخص"]},
    "hi": {"chair": ["कुर्सी"], "table": ["मेज"], "fire": ["अग्निशामक"],
           "extinguisher": ["अग्निशामक"], "box": ["डिब्बा"], "plant": ["पौधा"],
           "person": ["व्यक्ति"]},
    "pcm": {},
    "en": {},
}

# --------------------------------------------------------------------------
# maps
# --------------------------------------------------------------------------


def build_lab_map() -> dict:
    size = 32  # 8 m x 8 m at 0.25 m/cell
    occupied = [[False] * size for _ in range(size)]  # row 0 = bottom (y = 0)
    for i in range(size):
        occupied[0][i] = occupied[size - 1][i] = True
        occupied[i][0] = occupied[i][size - 1] = True
    # obstacle block near the middle (world x 4.5-5.25, y 3-3.75)
    for row in range(12, 15):
        for col in range(18, 21):
            occupied[row][col] = True
    # L-shaped wall sealing off the north-east corner pocket (hides the box)
    for row in range(27, size):
        occupied[row][27] = True
    for col in range(27, size):
        occupied[27][col] = True

    rows_top_first = [
        "".join("#" if occupied[row][col] else "." for col in range(size))
        for row in range(size - 1, -1, -1)
    ]
    return {
        "resolution": 0.25,
        "origin": [0.0, 0.0],
        "rows": rows_top_first,
        "destinations": {
            "start": [2.0, 1.0, 0.0],
            "kitchen": [6.5, 6.5, 0.0],
            "office": [6.5, 1.0, 0.0],
            "charging station": [1.0, 6.5, 0.0],
        },
        "objects": [
            {"label": "chair", "x": 4.0, "y": 1.0, "z": 0.3, "radius": 0.22},
            {"label": "table", "x": 5.0, "y": 2.2, "z": 0.3, "radius": 0.35},
            {"label": "fire extinguisher", "x": 4.5, "y": 0.8, "z": 0.3, "radius": 0.18},
            {"label": "plant", "x": 6.0, "y": 2.5, "z": 0.3, "radius": 0.25},
            {"label": "person", "x": 2.0, "y": 5.0, "z": 0.3, "radius": 0.3},
            {"label": "box", "x": 7.5, "y": 7.5, "z": 0.3, "radius": 0.3},
        ],
    }


def build_arena_map() -> dict:
    size = 20  # 5 m x 5 m, empty
    rows = []
    for row in range(size):
        if row in (0, size - 1):
            rows.append("#" * size)
        else:
            rows.append("#" + "." * (size - 2) + "#")
    return {
        "resolution": 0.25,
        "origin": [0.0, 0.0],
        "rows": rows,
        "destinations": {"start": [2.5, 2.5, 0.0], "corner": [4.0, 4.0, 0.0]},
        "objects": [
            {"label": "chair", "x": 4.0, "y": 2.5, "z": 0.3, "radius": 0.22},
        ],
    }


# --------------------------------------------------------------------------
# fixture corpus: 20 tasks x 10 languages
# --------------------------------------------------------------------------

SUMMARY = {
    "en": "Understood, here is my action plan:",
    "de": "Verstanden, hier ist mein Aktionsplan:",
    "es": "Entendido, este es mi plan de acción:",
    "fr": "Compris, voici mon plan d'action :",
    "it": "Capito, ecco il mio piano d'azione:",
    "ru": "Понял, вот мой план действий:",
    "zh": "明白了，这是我的行动计划：",
    "ar": "مفهوم، هذه هي خطة عملي:",
    "hi": "समझ गया, यह मेरी कार्य योजना है:",
    "pcm": "I don hear, na here my plan dey:",
}

CAPABILITIES = {
    "en": "I can navigate to coordinates or named destinations, execute movement "
          "patterns, detect and approach objects, describe my surroundings, capture "
          "images, and report my pose. I understand commands in many languages.",
    "de": "Ich kann zu Koordinaten oder benannten Zielen navigieren, Bewegungsmuster "
          "ausführen, Objekte erkennen und anfahren, meine Umgebung beschreiben, "
          "Bilder aufnehmen und meine Pose melden.",
    "es": "Puedo navegar a coordenadas o destinos con nombre, ejecutar patrones de "
          "movimiento, detectar objetos y acercarme a ellos, describir mi entorno, "
          "capturar imágenes e informar mi pose.",
    "fr": "Je peux naviguer vers des coordonnées ou des destinations nommées, exécuter "
          "des motifs de déplacement, détecter des objets et m'en approcher, décrire "
          "mon environnement, capturer des images et indiquer ma pose.",
    "it": "Posso navigare verso coordinate o destinazioni con nome, eseguire schemi di "
          "movimento, rilevare oggetti e avvicinarmi, descrivere l'ambiente, catturare "
          "immagini e riportare la mia posa.",
    "ru": "Я могу двигаться к координатам или именованным местам, выполнять "
          "траектории, обнаруживать объекты и подъезжать к ним, описывать окружение, "
          "делать снимки и сообщать свою позу.",
    "zh": "我可以导航到坐标或命名地点，执行运动模式，检测并接近物体，描述周围环境，"
          "拍摄图像并报告我的姿态。",
    "ar": "أستطيع الانتقال إلى إحداثيات أو وجهات مسماة، وتنفيذ أنماط حركة، واكتشاف "
          "الأجسام والاقتراب منها، ووصف محيطي، والتقاط الصور، والإبلاغ عن وضعيتي.",
    "hi": "मैं निर्देशांक या नामित स्थानों तक जा सकता हूँ, गति पैटर्न चला सकता हूँ, वस्तुएँ पहचान कर उनके "
          "पास जा सकता हूँ, अपने आसपास का वर्णन कर सकता हूँ, तस्वीरें ले सकता हूँ और अपनी स्थिति बता "
          "सकता हूँ।",
    "pcm": "I fit go coordinates or place wey get name, do movement pattern, see "
           "object and waka go meet am, talk wetin dey around me, snap picture, and "
           "tell you where I dey.",
}

# action phrases are canonical parser grammar; None = conversational reply
TASKS: list[dict] = [
    {
        "id": "w_move_turn",
        "actions": ["Move forward 2 m at 0.2 m/s", "Turn right 90 deg at 30 deg/s"],
        "text": {
            "en": "Move forward 2 meters at 0.2 m/s and then turn right 90 degrees.",
            "de": "Fahre 2 Meter mit 0,2 m/s vorwärts und drehe dich dann um 90 Grad nach rechts.",
            "es": "Avanza 2 metros a 0,2 m/s y luego gira 90 grados a la derecha.",
            "fr": "Avance de 2 mètres à 0,2 m/s puis tourne de 90 degrés à droite.",
            "it": "Avanza di 2 metri a 0,2 m/s e poi gira di 90 gradi a destra.",
            "ru": "Проедь 2 метра вперёд со скоростью 0,2 м/с, а затем повернись на 90 градусов направо.",
            "zh": "以0.2米每秒的速度前进2米，然后向右转90度。",
            "ar": "تحرك للأمام مترين بسرعة 0.2 متر في الثانية ثم استدر 90 درجة إلى اليمين.",
            "hi": "0.2 मीटर प्रति सेकंड की गति से 2 मीटर आगे बढ़ो और फिर 90 डिग्री दाएँ मुड़ो।",
            "pcm": "Waka go front 2 meters for 0.2 m/s, den turn right 90 degrees.",
        },
    },
    {
        "id": "w_backward",
        "actions": ["Move backward 1 m at 0.2 m/s"],
        "text": {
            "en": "Move backward 1 meter at 0.2 m/s.",
            "de": "Fahre 1 Meter mit 0,2 m/s rückwärts.",
            "es": "Retrocede 1 metro a 0,2 m/s.",
            "fr": "Recule d'un mètre à 0,2 m/s.",
            "it": "Indietreggia di 1 metro a 0,2 m/s.",
            "ru": "Сдай назад на 1 метр со скоростью 0,2 м/с.",
            "zh": "以0.2米每秒的速度后退1米。",
            "ar": "تحرك للخلف مترا واحدا بسرعة 0.2 متر في الثانية.",
            "hi": "0.2 मीटर प्रति सेकंड की गति से 1 मीटर पीछे जाओ।",
            "pcm": "Waka go back 1 meter for 0.2 m/s.",
        },
    },
    {
        "id": "w_unit_conversion",
        "actions": ["Move forward 5 m at 0.25 m/s"],
        "text": {
            "en": "Convert 500 centimeters into meters and move forward that distance at 0.25 m/s.",
            "de": "Rechne 500 Zentimeter in Meter um und fahre diese Strecke mit 0,25 m/s vorwärts.",
            "es": "Convierte 500 centímetros a metros y avanza esa distancia a 0,25 m/s.",
            "fr": "Convertis 500 centimètres en mètres et avance de cette distance à 0,25 m/s.",
            "it": "Converti 500 centimetri in metri e avanza di quella distanza a 0,25 m/s.",
            "ru": "Переведи 500 сантиметров в метры и проедь это расстояние вперёд со скоростью 0,25 м/с.",
            "zh": "把500厘米换算成米，然后以0.25米每秒的速度前进这段距离。",
            "ar": "حول 500 سنتيمتر إلى أمتار ثم تحرك للأمام بهذه المسافة بسرعة 0.25 متر في الثانية.",
            "hi": "500 सेंटीमीटर को मीटर में बदलो और उतनी दूरी 0.25 मीटर प्रति सेकंड की गति से आगे बढ़ो।",
            "pcm": "Change 500 centimeters to meters, den waka go front that distance for 0.25 m/s.",
        },
    },
    {
        "id": "w_circle",
        "actions": ["Move in a circle of radius 1 m at 1 m/s"],
        "text": {
            "en": "Move in a circle of radius 1 meter at 1 m/s.",
            "de": "Fahre einen Kreis mit 1 Meter Radius mit 1 m/s.",
            "es": "Muévete en un círculo de 1 metro de radio a 1 m/s.",
            "fr": "Déplace-toi en cercle d'un mètre de rayon à 1 m/s.",
            "it": "Muoviti in cerchio con raggio di 1 metro a 1 m/s.",
            "ru": "Проедь по кругу радиусом 1 метр со скоростью 1 м/с.",
            "zh": "以1米每秒的速度沿半径1米的圆圈移动。",
            "ar": "تحرك في دائرة نصف قطرها متر واحد بسرعة متر في الثانية.",
            "hi": "1 मीटर त्रिज्या के वृत्त में 1 मीटर प्रति सेकंड की गति से घूमो।",
            "pcm": "Make circle wey im radius na 1 meter for 1 m/s.",
        },
    },
    {
        "id": "g_coords",
        "actions": ["Navigate to the coordinates x = 2, y = 3, z = 0 at 0.5 m/s"],
        "text": {
            "en": "Navigate to the coordinates x = 2, y = 3, z = 0 at 0.5 m/s.",
            "de": "Navigiere zu den Koordinaten x = 2, y = 3, z = 0 mit 0,5 m/s.",
            "es": "Navega a las coordenadas x = 2, y = 3, z = 0 a 0,5 m/s.",
            "fr": "Navigue vers les coordonnées x = 2, y = 3, z = 0 à 0,5 m/s.",
            "it": "Naviga alle coordinate x = 2, y = 3, z = 0 a 0,5 m/s.",
            "ru": "Двигайся к координатам x = 2, y = 3, z = 0 со скоростью 0,5 м/с.",
            "zh": "以0.5米每秒的速度导航到坐标 x = 2，y = 3，z = 0。",
            "ar": "انتقل إلى الإحداثيات x = 2، y = 3، z = 0 بسرعة 0.5 متر في الثانية.",
            "hi": "0.5 मीटर प्रति सेकंड की गति से निर्देशांक x = 2, y = 3, z = 0 पर जाओ।",
            "pcm": "Go the coordinates x = 2, y = 3, z = 0 for 0.5 m/s.",
        },
    },
    {
        "id": "g_kitchen",
        "actions": ["Navigate to the kitchen at 0.5 m/s"],
        "text": {
            "en": "Go to the kitchen at 0.5 m/s.",
            "de": "Geh mit 0,5 m/s in die Küche.",
            "es": "Ve a la cocina a 0,5 m/s.",
            "fr": "Va à la cuisine à 0,5 m/s.",
            "it": "Vai in cucina a 0,5 m/s.",
            "ru": "Иди на кухню со скоростью 0,5 м/с.",
            "zh": "以0.5米每秒的速度去厨房。",
            "ar": "اذهب إلى المطبخ بسرعة 0.5 متر في الثانية.",
            "hi": "0.5 मीटर प्रति सेकंड की गति से रसोई में जाओ।",
            "pcm": "Go kitchen for 0.5 m/s.",
        },
    },
    {
        "id": "g_coords_turn",
        "actions": [
            "Navigate to the coordinates x = 4, y = 1, z = 0 at 0.5 m/s",
            "Turn left 90 deg at 30 deg/s",
        ],
        "text": {
            "en": "Navigate to the coordinates x = 4, y = 1, z = 0 at 0.5 m/s, then turn left 90 degrees.",
            "de": "Navigiere zu den Koordinaten x = 4, y = 1, z = 0 mit 0,5 m/s und drehe dich danach um 90 Grad nach links.",
            "es": "Navega a las coordenadas x = 4, y = 1, z = 0 a 0,5 m/s y después gira 90 grados a la izquierda.",
            "fr": "Navigue vers les coordonnées x = 4, y = 1, z = 0 à 0,5 m/s, puis tourne de 90 degrés à gauche.",
            "it": "Naviga alle coordinate x = 4, y = 1, z = 0 a 0,5 m/s, poi gira di 90 gradi a sinistra.",
            "ru": "Двигайся к координатам x = 4, y = 1, z = 0 со скоростью 0,5 м/с, затем повернись на 90 градусов налево.",
            "zh": "以0.5米每秒的速度导航到坐标 x = 4，y = 1，z = 0，然后向左转90度。",
            "ar": "انتقل إلى الإحداثيات x = 4، y = 1، z = 0 بسرعة 0.5 متر في الثانية ثم استدر 90 درجة إلى اليسار.",
            "hi": "0.5 मीटर प्रति सेकंड की गति से निर्देशांक x = 4, y = 1, z = 0 पर जाओ, फिर 90 डिग्री बाएँ मुड़ो।",
            "pcm": "Go the coordinates x = 4, y = 1, z = 0 for 0.5 m/s, den turn left 90 degrees.",
        },
    },
    {
        "id": "g_station_roundtrip",
        "actions": [
            "Navigate to the charging station at 0.5 m/s",
            "Wait 2 seconds",
            "Navigate to the start at 0.5 m/s",
        ],
        "text": {
            "en": "Head to the charging station, wait 2 seconds, then return to the start.",
            "de": "Fahre zur Ladestation, warte 2 Sekunden und kehre dann zum Start zurück.",
            "es": "Dirígete a la estación de carga, espera 2 segundos y luego vuelve al inicio.",
            "fr": "Rends-toi à la station de charge, attends 2 secondes, puis retourne au départ.",
            "it": "Vai alla stazione di ricarica, aspetta 2 secondi e poi torna alla partenza.",
            "ru": "Отправляйся к зарядной станции, подожди 2 секунды, затем вернись на старт.",
            "zh": "前往充电站，等待2秒，然后回到起点。",
            "ar": "توجه إلى محطة الشحن وانتظر ثانيتين ثم عد إلى نقطة البداية.",
            "hi": "चार्जिंग स्टेशन पर जाओ, 2 सेकंड रुको, फिर शुरुआत पर लौट आओ।",
            "pcm": "Go charging station, wait 2 seconds, den go back where you start.",
        },
    },
    {
        "id": "q_capabilities",
        "actions": None,  # conversational
        "text": {
            "en": "What are your capabilities?",
            "de": "Was sind deine Fähigkeiten?",
            "es": "¿Cuáles son tus capacidades?",
            "fr": "Quelles sont tes capacités ?",
            "it": "Quali sono le tue capacità?",
            "ru": "Какие у тебя возможности?",
            "zh": "你有哪些能力？",
            "ar": "ما هي قدراتك؟",
            "hi": "तुम्हारी क्षमताएँ क्या हैं?",
            "pcm": "Wetin you fit do?",
        },
    },
    {
        "id": "q_pose",
        "actions": ["Report pose"],
        "text": {
            "en": "Report your current position and orientation.",
            "de": "Melde deine aktuelle Position und Ausrichtung.",
            "es": "Informa tu posición y orientación actuales.",
            "fr": "Indique ta position et ton orientation actuelles.",
            "it": "Riporta la tua posizione e il tuo orientamento attuali.",
            "ru": "Сообщи свою текущую позицию и ориентацию.",
            "zh": "报告你当前的位置和朝向。",
            "ar": "أبلغ عن موقعك واتجاهك الحاليين.",
            "hi": "अपनी वर्तमान स्थिति और दिशा बताओ।",
            "pcm": "Tell me where you dey now and which side you face.",
        },
    },
    {
        "id": "q_describe",
        "actions": ["Describe surroundings"],
        "text": {
            "en": "Describe your surroundings.",
            "de": "Beschreibe deine Umgebung.",
            "es": "Describe tu entorno.",
            "fr": "Décris ton environnement.",
            "it": "Descrivi ciò che ti circonda.",
            "ru": "Опиши своё окружение.",
            "zh": "描述你周围的环境。",
            "ar": "صف محيطك.",
            "hi": "अपने आसपास का वर्णन करो।",
            "pcm": "Talk wetin dey around you.",
        },
    },
    {
        "id": "q_photo",
        "actions": ["Capture image"],
        "text": {
            "en": "Take a photo of your surroundings.",
            "de": "Mach ein Foto von deiner Umgebung.",
            "es": "Toma una foto de tu entorno.",
            "fr": "Prends une photo de ton environnement.",
            "it": "Scatta una foto dell'ambiente intorno a te.",
            "ru": "Сделай фото своего окружения.",
            "zh": "拍一张你周围环境的照片。",
            "ar": "التقط صورة لمحيطك.",
            "hi": "अपने आसपास की एक तस्वीर लो।",
            "pcm": "Snap photo of wetin dey around you.",
        },
    },
    {
        "id": "o_chair",
        "actions": ["Navigate to the detected chair"],
        "text": {
            "en": "Navigate to the detected chair.",
            "de": "Navigiere zum erkannten Stuhl.",
            "es": "Navega hasta la silla detectada.",
            "fr": "Navigue vers la chaise détectée.",
            "it": "Naviga verso la sedia rilevata.",
            "ru": "Двигайся к обнаруженному стулу.",
            "zh": "导航到检测到的椅子。",
            "ar": "انتقل إلى الكرسي المكتشف.",
            "hi": "पहचानी गई कुर्सी के पास जाओ।",
            "pcm": "Go meet the chair wey you see.",
        },
    },
    {
        "id": "o_best",
        "actions": ["Go to the detected object with the highest confidence"],
        "text": {
            "en": "Go to the detected object with the highest confidence.",
            "de": "Geh zu dem erkannten Objekt mit der höchsten Konfidenz.",
            "es": "Ve al objeto detectado con la mayor confianza.",
            "fr": "Va vers l'objet détecté avec la plus grande confiance.",
            "it": "Vai all'oggetto rilevato con la confidenza più alta.",
            "ru": "Иди к обнаруженному объекту с наибольшей уверенностью.",
            "zh": "前往置信度最高的检测物体。",
            "ar": "اذهب إلى الجسم المكتشف بأعلى درجة ثقة.",
            "hi": "सबसे अधिक विश्वास वाले पहचाने गए ऑब्जेक्ट के पास जाओ।",
            "pcm": "Go meet the object wey you sure pass.",
        },
    },
    {
        "id": "o_table_describe",
        "actions": ["Navigate to the detected table", "Describe surroundings"],
        "text": {
            "en": "Move toward the detected table and then describe your surroundings.",
            "de": "Fahre zum erkannten Tisch und beschreibe danach deine Umgebung.",
            "es": "Acércate a la mesa detectada y luego describe tu entorno.",
            "fr": "Approche-toi de la table détectée puis décris ton environnement.",
            "it": "Avvicinati al tavolo rilevato e poi descrivi ciò che ti circonda.",
            "ru": "Подъезжай к обнаруженному столу, а затем опиши своё окружение.",
            "zh": "移动到检测到的桌子旁，然后描述你周围的环境。",
            "ar": "تحرك نحو الطاولة المكتشفة ثم صف محيطك.",
            "hi": "पहचानी गई मेज की ओर बढ़ो और फिर अपने आसपास का वर्णन करो।",
            "pcm": "Waka go the table wey you see, den talk wetin dey around you.",
        },
    },
    {
        # deliberately ambiguous in en/de: the box is sealed off and never
        # visible, so execution fails; the other languages target the
        # visible fire extinguisher
        "id": "o_hard",
        "actions": None,  # per-language, see build_fixtures()
        "text": {
            "en": "Navigate to the detected box.",
            "de": "Navigiere zur erkannten Kiste.",
            "es": "Navega hasta el extintor detectado.",
            "fr": "Navigue vers l'extincteur détecté.",
            "it": "Naviga verso l'estintore rilevato.",
            "ru": "Двигайся к обнаруженному огнетушителю.",
            "zh": "导航到检测到的灭火器。",
            "ar": "انتقل إلى طفاية الحريق المكتشفة.",
            "hi": "पहचाने गए अग्निशामक यंत्र के पास जाओ।",
            "pcm": "Go meet the fire extinguisher wey you see.",
        },
    },
    {
        "id": "c_kitchen",
        "actions": ["Navigate to the kitchen at 0.5 m/s"],
        "text": {
            "en": "Head to the place where one can cook food.",
            "de": "Fahre zu dem Ort, an dem man Essen kochen kann.",
            "es": "Ve al lugar donde se puede cocinar comida.",
            "fr": "Rends-toi à l'endroit où l'on peut cuisiner.",
            "it": "Vai nel posto dove si può cucinare.",
            "ru": "Отправляйся туда, где можно готовить еду.",
            "zh": "去可以做饭的地方。",
            "ar": "اذهب إلى المكان الذي يمكن فيه طهي الطعام.",
            "hi": "वहाँ जाओ जहाँ खाना पकाया जा सकता है।",
            "pcm": "Go the place wey person fit cook food.",
        },
    },
    {
        "id": "c_office",
        "actions": ["Navigate to the office at 0.5 m/s"],
        "text": {
            "en": "Go to where administrative tasks are handled.",
            "de": "Geh dorthin, wo Verwaltungsaufgaben erledigt werden.",
            "es": "Ve a donde se gestionan los trámites administrativos.",
            "fr": "Va là où les tâches administratives sont traitées.",
            "it": "Vai dove si svolgono le pratiche amministrative.",
            "ru": "Иди туда, где занимаются административными делами.",
            "zh": "去处理行政事务的地方。",
            "ar": "اذهب إلى حيث تعالج المهام الإدارية.",
            "hi": "वहाँ जाओ जहाँ प्रशासनिक काम होते हैं।",
            "pcm": "Go where dem dey do office work.",
        },
    },
    {
        "id": "c_conditional_detection",
        "actions": [
            "If you detect any object with probability >= 80%: Capture image "
            "else: Turn left 90 deg at 30 deg/s"
        ],
        "text": {
            "en": "If you detect any object with probability of at least 80 percent, capture an image; otherwise turn left 90 degrees.",
            "de": "Wenn du ein Objekt mit mindestens 80 Prozent Wahrscheinlichkeit erkennst, mach ein Bild; andernfalls drehe dich um 90 Grad nach links.",
            "es": "Si detectas algún objeto con una probabilidad de al menos el 80 por ciento, captura una imagen; si no, gira 90 grados a la izquierda.",
            "fr": "Si tu détectes un objet avec une probabilité d'au moins 80 pour cent, capture une image ; sinon tourne de 90 degrés à gauche.",
            "it": "Se rilevi un oggetto con probabilità di almeno l'80 per cento, cattura un'immagine; altrimenti gira di 90 gradi a sinistra.",
            "ru": "Если ты обнаружишь объект с вероятностью не менее 80 процентов, сделай снимок; иначе повернись на 90 градусов налево.",
            "zh": "如果你检测到置信度至少为80%的物体，就拍一张图像；否则向左转90度。",
            "ar": "إذا اكتشفت أي جسم باحتمال لا يقل عن 80 بالمئة فالتقط صورة؛ وإلا استدر 90 درجة إلى اليسار.",
            "hi": "यदि तुम्हें कम से कम 80 प्रतिशत संभावना वाला कोई ऑब्जेक्ट दिखे तो एक तस्वीर लो; अन्यथा 90 डिग्री बाएँ मुड़ो।",
            "pcm": "If you see any object wey you sure reach 80 percent, snap picture; if not, turn left 90 degrees.",
        },
    },
    {
        "id": "c_travel_time",
        "actions": [
            "If travel time to x = 5, y = 5, z = 0 at 1 m/s exceeds 10 seconds: "
            "Report pose else: Navigate to the coordinates x = 5, y = 5, z = 0 at 1 m/s"
        ],
        "text": {
            "en": "Check whether traveling to x = 5, y = 5, z = 0 at 1 m/s takes more than 10 seconds; if yes report your pose, otherwise navigate there.",
            "de": "Prüfe, ob die Fahrt zu x = 5, y = 5, z = 0 mit 1 m/s länger als 10 Sekunden dauert; wenn ja, melde deine Pose, sonst navigiere dorthin.",
            "es": "Comprueba si viajar a x = 5, y = 5, z = 0 a 1 m/s tarda más de 10 segundos; si es así, informa tu pose; de lo contrario, navega hasta allí.",
            "fr": "Vérifie si le trajet vers x = 5, y = 5, z = 0 à 1 m/s prend plus de 10 secondes ; si oui, indique ta pose, sinon navigue jusque-là.",
            "it": "Verifica se il viaggio verso x = 5, y = 5, z = 0 a 1 m/s richiede più di 10 secondi; in tal caso riporta la tua posa, altrimenti naviga fin lì.",
            "ru": "Проверь, займёт ли путь к x = 5, y = 5, z = 0 со скоростью 1 м/с больше 10 секунд; если да, сообщи свою позу, иначе двигайся туда.",
            "zh": "计算以1米每秒的速度前往 x = 5，y = 5，z = 0 是否需要超过10秒；如果是，报告你的姿态，否则导航到那里。",
            "ar": "تحقق مما إذا كان الانتقال إلى x = 5، y = 5، z = 0 بسرعة متر في الثانية يستغرق أكثر من 10 ثوان؛ إذا كان الأمر كذلك فأبلغ عن وضعيتك، وإلا فانتقل إلى هناك.",
            "hi": "जाँच करो कि x = 5, y = 5, z = 0 तक 1 मीटर प्रति सेकंड की गति से जाने में 10 सेकंड से अधिक लगते हैं या नहीं; यदि हाँ तो अपनी स्थिति बताओ, अन्यथा वहाँ जाओ।",
            "pcm": "Check whether to go x = 5, y = 5, z = 0 for 1 m/s go pass 10 seconds; if e pass, tell me your pose, if not, go there.",
        },
    },
]

O_HARD_ACTIONS = {
    "en": ["Navigate to the detected box"],
    "de": ["Navigate to the detected box"],
    "default": ["Navigate to the detected fire extinguisher"],
}


def build_fixtures() -> list[dict]:
    records = []
    for lang in LANGS:
        for task in TASKS:
            text = task["text"][lang]
            actions = task["actions"]
            if task["id"] == "o_hard":
                actions = O_HARD_ACTIONS.get(lang, O_HARD_ACTIONS["default"])
            if actions is None:
                reply = CAPABILITIES[lang]
                gold: list[str] = []
            else:
                lines = [f"Action {k}: {phrase}." for k, phrase in enumerate(actions, 1)]
                reply = "\n".join([SUMMARY[lang]] + lines)
                plan = parse_action_lines(lines)
                if plan.unparseable:
                    raise SystemExit(f"task {task['id']}: unparseable lines {plan.unparseable}")
                if format_plan(plan) != lines:
                    raise SystemExit(
                        f"task {task['id']}: canonical round-trip drifted\n"
                        f"  in:  {lines}\n  out: {format_plan(plan)}"
                    )
                gold = canonical_actions(plan)
            records.append(
                {"lang": lang, "text": text, "reply": reply, "gold_actions": gold}
            )
    return records


# --------------------------------------------------------------------------
# translation-QC sample dataset (hyp vs ref pairs per language)
# --------------------------------------------------------------------------

TRANSLATION_SAMPLES = [
    {"source": "Move forward two meters and stop.", "lang": "de",
     "hyp": "Fahre zwei Meter vorwärts und halte an.",
     "ref": "Fahre zwei Meter vorwärts und halte dann an."},
    {"source": "Turn left ninety degrees.", "lang": "de",
     "hyp": "Drehe dich um 90 Grad nach links.",
     "ref": "Drehe dich um 90 Grad nach links."},
    {"source": "Go to the kitchen and wait there.", "lang": "de",
     "hyp": "Geh in die Küche und warte.",
     "ref": "Geh in die Küche und warte dort."},
    {"source": "Move forward two meters and stop.", "lang": "es",
     "hyp": "Avanza dos metros y detente.",
     "ref": "Avanza dos metros y luego detente."},
    {"source": "Turn left ninety degrees.", "lang": "es",
     "hyp": "Gira 90 grados a la izquierda.",
     "ref": "Gira noventa grados a la izquierda."},
    {"source": "Go to the kitchen and wait there.", "lang": "es",
     "hyp": "Ve a la cocina y espera allí.",
     "ref": "Ve a la cocina y espera allí."},
    {"source": "Move forward two meters and stop.", "lang": "fr",
     "hyp": "Avance de deux mètres puis arrête-toi.",
     "ref": "Avance de deux mètres et arrête-toi."},
    {"source": "Turn left ninety degrees.", "lang": "fr",
     "hyp": "Tourne de 90 degrés vers la gauche.",
     "ref": "Tourne de 90 degrés à gauche."},
    {"source": "Go to the kitchen and wait there.", "lang": "fr",
     "hyp": "Va à la cuisine et attends là-bas.",
     "ref": "Va à la cuisine et attends-y."},
]


# --------------------------------------------------------------------------


def main() -> None:
    (DATA / "profiles").mkdir(parents=True, exist_ok=True)
    (DATA / "lexicon").mkdir(parents=True, exist_ok=True)
    (DATA / "responses").mkdir(parents=True, exist_ok=True)
    (DATA / "maps").mkdir(parents=True, exist_ok=True)
    (DATA / "fixtures").mkdir(parents=True, exist_ok=True)

    fixtures = build_fixtures()

    for lang in LANGS:
        # profiles are trained on the seed text plus the language's fixture
        # commands, so bench-time detection sees in-domain trigrams
        fixture_text = " ".join(r["text"] for r in fixtures if r["lang"] == lang)
        profile = LanguageProfile.from_text(lang, SEEDS[lang] + " " + fixture_text)
        profile.save(DATA / "profiles" / f"{lang}.tsv")

        (DATA / "lexicon" / f"{lang}.json").write_text(
            json.dumps(LEXICONS[lang], ensure_ascii=False, indent=2) + "\n",
            encoding="utf-8",
        )
        (DATA / "responses" / f"{lang}.json").write_text(
            json.dumps(RESPONSES[lang], ensure_ascii=False, indent=2) + "\n",
            encoding="utf-8",
        )

    (DATA / "synonyms.json").write_text(
        json.dumps(SYNONYMS, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    (DATA / "maps" / "lab.json").write_text(
        json.dumps(build_lab_map(), ensure_ascii=False, indent=1) + "\n", encoding="utf-8"
    )
    (DATA / "maps" / "arena.json").write_text(
        json.dumps(build_arena_map(), ensure_ascii=False, indent=1) + "\n", encoding="utf-8"
    )

    with open(DATA / "fixtures" / "corpus.jsonl", "w", encoding="utf-8") as fh:
        for record in fixtures:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")

    with open(DATA / "fixtures" / "translations.jsonl", "w", encoding="utf-8") as fh:
        for record in TRANSLATION_SAMPLES:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")

    print(f"wrote data for {len(LANGS)} languages, {len(fixtures)} fixture records")


if __name__ == "__main__":
    main()
